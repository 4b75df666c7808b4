"""Exception hierarchy shared by the library and the CLI exit-code contract."""


class SqestError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(SqestError, ValueError):
    """Invalid input: bad parameters, malformed grids, wrong frame, bad files.

    Mapped to CLI exit code 2.
    """


class FrameError(ValidationError):
    """A distribution was supplied in the wrong frame (absolute vs error)."""


class GridTooSmallError(ValidationError):
    """A requested grid cannot contain the state's support."""


class SupportOverflowError(ValidationError):
    """A rescaled wavefunction no longer fits the fixed grid."""


class NumericalQualityError(SqestError, RuntimeError):
    """A numerical-quality gate failed (truncation, normalization, aliasing).

    Mapped to CLI exit code 3.
    """


class TruncationError(NumericalQualityError):
    """The characteristic function has not decayed at the integration cutoff."""


class NormalizationError(NumericalQualityError):
    """A density failed its completeness (unit-integral) check."""


class WindowCaptureError(NumericalQualityError):
    """A distribution window captures too little probability mass."""
