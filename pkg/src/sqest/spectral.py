"""Spectral density of the squeezing generator, by two independent routes.

The generator of squeezing has a doubly degenerate continuous spectrum over
the reals; for a pure state psi the spectral density ``g(mu)`` is the
probability density of generator outcomes.  It can be computed either

* from the characteristic function ``chi(lam) = <psi|S(lam)|psi>`` as
  ``g(mu) = (1/2pi) int exp(i lam mu) chi(lam) dlam``, or
* from the generalized eigenfunctions ``|x|^(i mu - 1/2) theta(s x)``, which
  turns into a Fourier integral in ``u = ln x`` over a logarithmic grid, one
  per half-line ``s = +-1``:
  ``a_s(mu) = (2 pi)^(-1/2) int du exp(-i mu u) exp(u/2) psi(s e^u)`` and
  ``g = sum_s |a_s|^2``.

The two routes share no code beyond the generic Fourier quadrature, so their
agreement is used as a built-in numerical oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid

from .errors import NormalizationError, NumericalQualityError, TruncationError, ValidationError
from .fourier import fourier_quadrature
from .grids import GridSpec
from .states import WavefunctionGrid, char_fn_numeric

CHI_DECAY_TOL = 1e-8     # required |chi| at the lambda cutoff
LAMBDA_CAP = 60.0        # hard cap on the adaptive cutoff
DEFAULT_N_LAMBDA = 2**14
NEG_CLAMP = -1e-8        # values below this abort; above are clamped to 0
IMAG_TOL = 1e-6          # max tolerated imaginary residue of g
NORM_TOL_G = 1e-4        # completeness: |int g - 1|
_LOG_GRID_FLOOR = -40.0  # u = ln x lower cutoff; e^(u/2) kills the integrand


@dataclass(frozen=True)
class SpectralMetadata:
    """Numerical-quality record attached to a SpectralDensity."""

    route: str
    lambda_halfwidth: float | None
    n_lambda: int | None
    clamped_points: int
    max_imag_residue: float


@dataclass(frozen=True, eq=False)
class SpectralDensity:
    """Nonnegative spectral density g on a uniform mu grid.

    Construction enforces g >= 0, the recorded imaginary residue below
    ``IMAG_TOL``, and completeness ``int g dmu = 1`` within ``NORM_TOL_G``.
    """

    mu_min: float
    mu_max: float
    g: np.ndarray = field(repr=False)
    metadata: SpectralMetadata = SpectralMetadata("external", None, None, 0, 0.0)

    def __post_init__(self) -> None:
        g = np.asarray(self.g, dtype=float)
        if g.ndim != 1 or g.size < 2:
            raise ValidationError("spectral density needs at least 2 samples on a 1-d grid")
        if self.mu_max <= self.mu_min:
            raise ValidationError("mu bounds out of order")
        if not np.all(np.isfinite(g)):
            raise ValidationError("spectral density must be finite")
        if np.any(g < 0):
            raise ValidationError("spectral density must be nonnegative")
        g.setflags(write=False)
        object.__setattr__(self, "g", g)
        if self.metadata.max_imag_residue >= IMAG_TOL:
            raise NumericalQualityError(
                f"imaginary residue {self.metadata.max_imag_residue:.3e} exceeds {IMAG_TOL}"
            )
        norm = self.norm()
        if abs(norm - 1.0) > NORM_TOL_G:
            raise NormalizationError(
                f"spectral density integrates to {norm!r}, expected 1 within {NORM_TOL_G}"
            )

    @property
    def n_points(self) -> int:
        return self.g.size

    @property
    def dmu(self) -> float:
        return (self.mu_max - self.mu_min) / (self.n_points - 1)

    @property
    def mu(self) -> np.ndarray:
        return np.linspace(self.mu_min, self.mu_max, self.n_points)

    def grid(self) -> GridSpec:
        return GridSpec(self.mu_min, self.mu_max, self.n_points)

    def norm(self) -> float:
        return float(trapezoid(self.g, dx=self.dmu))

    def mean(self) -> float:
        return float(trapezoid(self.mu * self.g, dx=self.dmu))

    def std(self) -> float:
        m = self.mean()
        m2 = float(trapezoid(self.mu**2 * self.g, dx=self.dmu))
        return math.sqrt(max(m2 - m * m, 0.0))


def _eval_chi(chi, lam: np.ndarray) -> np.ndarray:
    out = np.asarray(chi(lam), dtype=complex)
    if out.shape != lam.shape:  # scalar-only callable
        out = np.array([chi(v) for v in lam], dtype=complex)
    return out


def adaptive_halfwidth(chi, tol: float = CHI_DECAY_TOL, cap: float = LAMBDA_CAP) -> float:
    """Smallest lambda cutoff with ``|chi| < tol``, scanned to ``cap``.

    Assumes |chi| is eventually decreasing (true for every displaced squeezed
    state, where |chi| is monotone in |lambda|).  Returns ``cap`` when chi has
    not decayed within it; the caller's decay check then reports the failure.
    """
    probes = np.linspace(0.0, cap, 2401)
    mags = np.abs(_eval_chi(chi, probes))
    below = np.nonzero(mags < tol)[0]
    if below.size == 0:
        return cap
    return min(cap, probes[below[0]] * 1.05 + 1e-3)


def default_mu_grid(chi) -> GridSpec:
    """Mu grid sized from the first two moments of g, read off chi near 0.

    ``chi(lam) = int g(mu) exp(-i lam mu) dmu``, so central finite differences
    at lam = 0 give the mean and variance of g.  The window adds a fixed 45
    units of half-width for the state-independent ``exp(-pi |mu| / 2)`` tails,
    and the step resolves both the bulk (scale sigma) and the tails (scale 1).
    """
    h = 1e-3
    c0, cp, cm = (complex(chi(v)) for v in (0.0, h, -h))
    mean = np.real(1j * (cp - cm) / (2 * h))
    m2 = -np.real((cp - 2 * c0 + cm) / h**2)
    sigma = math.sqrt(max(m2 - mean**2, 0.25))
    half = 12.0 * sigma + 45.0
    dmu = min(sigma, 1.0) / 32.0
    n = min(2 + int(math.ceil(2 * half / dmu)), 2**18)
    return GridSpec(mean - half, mean + half, n)


def spectral_density_from_charfn(
    chi,
    lambda_halfwidth: float | None = None,
    n_lambda: int = DEFAULT_N_LAMBDA,
    mu_grid: GridSpec | None = None,
) -> SpectralDensity:
    """Spectral density from the characteristic function.

    Parameters
    ----------
    chi : callable
        ``lam -> complex`` (array-aware or scalar), with ``chi(0) = 1`` and
        ``chi(-lam) = conj(chi(lam))``.
    lambda_halfwidth : float, optional
        Integration cutoff; adaptive (``adaptive_halfwidth``) when omitted.
        ``|chi|`` must be below ``CHI_DECAY_TOL`` at the cutoff.
    n_lambda : int
        Number of lambda samples; must be a power of two.
    mu_grid : GridSpec, optional
        Output grid.  Defaults to the grid reciprocal to the lambda grid
        (step ``2 pi / (n_lambda dlam)``, centered on 0); note that for very
        narrow chi (large displacement) the reciprocal step is coarse, so
        state-aware callers should pass ``default_mu_grid(chi)``.

    Raises
    ------
    TruncationError
        If chi has not decayed at the cutoff.
    NumericalQualityError
        If the transform has a large imaginary residue or negative values
        below ``NEG_CLAMP`` (both symptoms of aliasing).
    NormalizationError
        If the density does not integrate to 1.
    """
    if n_lambda < 4 or (n_lambda & (n_lambda - 1)) != 0:
        raise ValidationError(f"n_lambda must be a power of two >= 4, got {n_lambda}")
    if lambda_halfwidth is None:
        lambda_halfwidth = adaptive_halfwidth(chi)
    if not (math.isfinite(lambda_halfwidth) and lambda_halfwidth > 0):
        raise ValidationError("lambda_halfwidth must be positive and finite")
    tail = max(abs(complex(chi(lambda_halfwidth))), abs(complex(chi(-lambda_halfwidth))))
    if tail >= CHI_DECAY_TOL:
        raise TruncationError(
            f"|chi| = {tail:.3e} at the cutoff {lambda_halfwidth}; "
            f"required below {CHI_DECAY_TOL}"
        )

    lam_grid = GridSpec(-lambda_halfwidth, lambda_halfwidth, n_lambda)
    chi_vals = _eval_chi(chi, lam_grid.points())
    if mu_grid is None:
        dmu = 2 * np.pi / (n_lambda * lam_grid.step)
        lo = -(n_lambda // 2) * dmu
        mu_grid = GridSpec(lo, lo + (n_lambda - 1) * dmu, n_lambda)

    g_complex = fourier_quadrature(chi_vals, lam_grid, mu_grid, sign=1) / (2 * np.pi)
    max_imag = float(np.max(np.abs(g_complex.imag)))
    g = np.array(g_complex.real)
    worst = float(g.min())
    if worst < NEG_CLAMP:
        raise NumericalQualityError(
            f"spectral density reaches {worst:.3e} < {NEG_CLAMP}; "
            "the lambda grid is aliasing"
        )
    negative = g < 0
    clamped = int(np.count_nonzero(negative))
    g[negative] = 0.0
    meta = SpectralMetadata(
        route="charfn",
        lambda_halfwidth=float(lambda_halfwidth),
        n_lambda=n_lambda,
        clamped_points=clamped,
        max_imag_residue=max_imag,
    )
    return SpectralDensity(mu_grid.lo, mu_grid.hi, g, meta)


def _mellin_amplitude(psi: WavefunctionGrid, s: int, mu_grid: GridSpec) -> np.ndarray:
    """Overlap amplitude a_s(mu) of psi with the half-line eigenfunctions.

    Fourier transform in ``u = ln x`` of ``h_s(u) = exp(u/2) psi(s e^u)``; psi
    is cubic-interpolated at ``e^u`` (0 outside its grid, exact to within the
    boundary-decay invariant).  Zero when the grid does not reach the s
    half-line at all.
    """
    x_bound = psi.x_max if s == 1 else -psi.x_min
    if x_bound <= 0:  # half-line not covered by the grid: zero weight there
        return np.zeros(mu_grid.n_points, dtype=complex)
    mu_absmax = max(abs(mu_grid.lo), abs(mu_grid.hi))
    u_max = math.log(x_bound)
    u_min = min(_LOG_GRID_FLOOR, u_max - 45.0)
    du = min(psi.dx / x_bound, np.pi / (8 * mu_absmax), 5e-3)
    n_u = min(2 + int(math.ceil((u_max - u_min) / du)), 2**19)
    u_grid = GridSpec(u_min, u_max, n_u)
    u = u_grid.points()
    h = np.exp(u / 2) * psi.interp(s * np.exp(u))
    return fourier_quadrature(h, u_grid, mu_grid, sign=-1) / math.sqrt(2 * np.pi)


def spectral_density_via_mellin(
    psi: WavefunctionGrid,
    mu_grid: GridSpec | None = None,
) -> SpectralDensity:
    """Spectral density from the eigenfunction overlaps on a logarithmic grid.

    ``g = |a_+|^2 + |a_-|^2`` over the two half-line amplitudes
    (``_mellin_amplitude``); nonnegative by construction, no clamping needed.

    Default ``mu_grid``: ``default_mu_grid`` on the numeric characteristic
    function of psi.
    """
    if mu_grid is None:
        mu_grid = default_mu_grid(lambda lam: char_fn_numeric(psi, lam))

    g = np.zeros(mu_grid.n_points)
    for s in (1, -1):
        g += np.abs(_mellin_amplitude(psi, s, mu_grid)) ** 2

    meta = SpectralMetadata(
        route="mellin",
        lambda_halfwidth=None,
        n_lambda=None,
        clamped_points=0,
        max_imag_residue=0.0,
    )
    return SpectralDensity(mu_grid.lo, mu_grid.hi, g, meta)
