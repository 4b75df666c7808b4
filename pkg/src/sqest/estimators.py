"""Outcome distributions of the three estimation strategies.

* ``optimal_distribution`` -- the optimal covariant measurement.  Its density
  over the estimation error ``t = rhat - r`` is
  ``p(t) = (1/2pi) |int dmu exp(-i t mu) sqrt(g(mu))|^2``
  and depends on the true value only through ``t`` (error frame).
* ``lnx_distribution`` -- the rival strategy of measuring ``ln |X|``.  Its
  density over the absolute estimate ``rhat`` is
  ``p(rhat) = e^rhat (|psi_r(e^rhat)|^2 + |psi_r(-e^rhat)|^2)``
  where ``psi_r`` is the squeezed input; it is biased and not covariant in
  shape, so it is kept in the absolute frame and shifted for comparisons.
* ``homodyne_mc`` -- Monte Carlo of the asymptotic plug-in estimator
  ``rhat = ln |x / alpha|`` from quadrature samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import trapezoid

from .errors import ValidationError, WindowCaptureError
from .fourier import fourier_quadrature
from .grids import GridSpec
from .spectral import (
    SpectralDensity,
    default_mu_grid,
    spectral_density_from_charfn,
    spectral_density_via_mellin,
)
from .states import (
    GaussianPureState,
    WavefunctionGrid,
    apply_squeeze,
    char_fn_analytic,
    quadrature_std,
    wavefunction,
)

ERROR_FRAME = "error"
ABSOLUTE_FRAME = "absolute"
CAPTURE_MIN = 0.999
DEFAULT_T_POINTS = 8192
DEFAULT_T_HALFWIDTH = 8.0
NARROW_SIGMA = 4.0        # above this, shrink the window to +- 12/(2 sigma)
LNX_LEFT_TAIL = 18.0      # left extent of the default ln|X| window below r_true


@dataclass(frozen=True)
class DistributionSummary:
    """Trapezoidal summary statistics of a ShiftDistribution."""

    mean: float
    mode: float
    rmse: float
    captured: float


@dataclass(frozen=True, eq=False)
class ShiftDistribution:
    """Probability density over the estimate, on a uniform grid.

    ``frame`` is ``"error"`` (density over ``t = rhat - r``, statistics taken
    about 0) or ``"absolute"`` (density over ``rhat`` at true value
    ``r_true``, statistics taken about ``r_true``).  Construction validates
    nonnegativity and that the window captures at least ``CAPTURE_MIN`` of the
    total probability; the capture is recorded in the summary.
    """

    t_min: float
    t_max: float
    p: np.ndarray = field(repr=False)
    frame: str = ERROR_FRAME
    r_true: float = 0.0

    def __post_init__(self) -> None:
        if self.frame not in (ERROR_FRAME, ABSOLUTE_FRAME):
            raise ValidationError(f"unknown frame {self.frame!r}")
        p = np.asarray(self.p, dtype=float)
        if p.ndim != 1 or p.size < 2:
            raise ValidationError("distribution needs at least 2 samples on a 1-d grid")
        if self.t_max <= self.t_min:
            raise ValidationError("window bounds out of order")
        if not np.all(np.isfinite(p)):
            raise ValidationError("distribution must be finite")
        if np.any(p < 0):
            raise ValidationError("distribution must be nonnegative")
        p.setflags(write=False)
        object.__setattr__(self, "p", p)

        captured = float(trapezoid(p, dx=self.dt))
        if captured < CAPTURE_MIN:
            raise WindowCaptureError(
                f"window [{self.t_min}, {self.t_max}] captures only {captured:.6f} "
                f"of the probability (need {CAPTURE_MIN})"
            )
        center = 0.0 if self.frame == ERROR_FRAME else self.r_true
        t = self.t
        mean = float(trapezoid(t * p, dx=self.dt))
        rmse = math.sqrt(float(trapezoid((t - center) ** 2 * p, dx=self.dt)))
        peak = np.nonzero(p == p.max())[0]
        mode_t = t[peak]
        # ties broken toward smallest |t - center|, then toward the left
        mode = float(min(mode_t, key=lambda v: (abs(v - center), v)))
        object.__setattr__(self, "summary", DistributionSummary(mean, mode, rmse, captured))

    summary: DistributionSummary = field(init=False, repr=False)

    @property
    def n_points(self) -> int:
        return self.p.size

    @property
    def dt(self) -> float:
        return (self.t_max - self.t_min) / (self.n_points - 1)

    @property
    def t(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.n_points)


def summarize(dist: ShiftDistribution) -> DistributionSummary:
    """Summary statistics (mean, mode, rmse about the true value, capture)."""
    return dist.summary


def to_error_frame(dist: ShiftDistribution) -> ShiftDistribution:
    """Shift an absolute-frame distribution to the error frame ``t = rhat - r``."""
    if dist.frame == ERROR_FRAME:
        return dist
    return ShiftDistribution(
        dist.t_min - dist.r_true, dist.t_max - dist.r_true, dist.p, ERROR_FRAME, 0.0
    )


def to_absolute_frame(dist: ShiftDistribution, r_true: float) -> ShiftDistribution:
    """Shift an error-frame distribution to the absolute frame at ``r_true``."""
    if dist.frame == ABSOLUTE_FRAME:
        if dist.r_true != r_true:
            raise ValidationError("distribution is already absolute at a different r_true")
        return dist
    return ShiftDistribution(
        dist.t_min + r_true, dist.t_max + r_true, dist.p, ABSOLUTE_FRAME, r_true
    )


def default_t_grid(g: SpectralDensity, n_points: int = DEFAULT_T_POINTS) -> GridSpec:
    """Default error window: [-8, 8], shrunk to +-12/(2 sigma) for sharp states.

    The optimal density has width ~ 1/(2 sigma) where sigma is the spread of
    g, so wide spectral densities need a narrow, finely resolved window.
    """
    sigma = g.std()
    half = DEFAULT_T_HALFWIDTH if sigma < NARROW_SIGMA else 12.0 / (2.0 * sigma)
    return GridSpec(-half, half, n_points)


def optimal_distribution(g: SpectralDensity, t_grid: GridSpec | None = None) -> ShiftDistribution:
    """Error distribution of the optimal covariant measurement.

    ``p(t) = (1/2pi) |int dmu exp(-i t mu) sqrt(g)|^2``, evaluated by Fourier
    quadrature of ``sqrt(g)`` on ``t_grid`` (default ``default_t_grid``).
    Symmetric about 0 for every input state because ``sqrt(g)`` is real.

    Raises ``WindowCaptureError`` when the window captures less than
    ``CAPTURE_MIN`` of the probability.
    """
    if t_grid is None:
        t_grid = default_t_grid(g)
    amplitude = fourier_quadrature(np.sqrt(g.g), g.grid(), t_grid, sign=-1)
    p = np.abs(amplitude) ** 2 / (2 * np.pi)
    return ShiftDistribution(t_grid.lo, t_grid.hi, p, ERROR_FRAME)


def lnx_distribution(
    psi: WavefunctionGrid,
    r_true: float,
    rhat_grid: GridSpec | None = None,
) -> ShiftDistribution:
    """Absolute-frame outcome density of the ``ln |X|`` measurement.

    The squeezed input ``psi_r = apply_squeeze(psi, r_true)`` is measured at
    the quadrature eigenvalues ``+-e^rhat`` with Jacobian ``e^rhat``:
    ``p(rhat) = e^rhat (|psi_r(e^rhat)|^2 + |psi_r(-e^rhat)|^2)``.

    The default window ``[r_true - 18, ln(max |grid bound|)]`` makes the
    left-tail loss (the slow ``e^rhat`` tail toward small ``|x|``) negligible
    and ends where the squeezed support ends.
    """
    phi = apply_squeeze(psi, r_true)
    if rhat_grid is None:
        hi = math.log(max(abs(phi.x_min), phi.x_max))
        rhat_grid = GridSpec(r_true - LNX_LEFT_TAIL, hi, DEFAULT_T_POINTS)
    rhat = rhat_grid.points()
    xs = np.exp(rhat)
    p = xs * (np.abs(phi.interp(xs)) ** 2 + np.abs(phi.interp(-xs)) ** 2)
    return ShiftDistribution(rhat_grid.lo, rhat_grid.hi, p, ABSOLUTE_FRAME, float(r_true))


@dataclass(frozen=True)
class HomodyneSummary:
    """Monte Carlo summary of the homodyne plug-in estimator."""

    n_samples: int
    bias: float
    rmse: float
    mean_estimate: float


def homodyne_mc(
    state: GaussianPureState,
    r_true: float,
    n_samples: int,
    seed: int | np.random.SeedSequence,
) -> HomodyneSummary:
    """Sample ``rhat = ln |x / alpha|`` from quadrature measurements.

    The squeezed state has ``X ~ Normal(Re(alpha) e^r, e^(2(r+z))/4)``; the
    plug-in estimate divides out the known displacement.  Fully deterministic
    for a given seed; pass ``SeedSequence`` children for independent
    per-task streams.
    """
    if state.alpha.real == 0.0:
        raise ValidationError("homodyne estimator is undefined for Re(alpha) = 0")
    n_samples = int(n_samples)
    if n_samples < 1:
        raise ValidationError("n_samples must be >= 1")
    r_true = float(r_true)
    mean_x = state.alpha.real * math.exp(r_true)
    sd_x = math.exp(r_true + state.z) / 2.0
    rng = np.random.default_rng(seed)
    x = rng.normal(mean_x, sd_x, n_samples)
    # |x| can underflow to 0 only on a measure-zero event; keep log finite
    rhat = np.log(np.maximum(np.abs(x), 1e-300) / abs(state.alpha.real))
    bias = float(np.mean(rhat) - r_true)
    rmse = float(np.sqrt(np.mean((rhat - r_true) ** 2)))
    return HomodyneSummary(n_samples, bias, rmse, float(np.mean(rhat)))


def optimal_distribution_for_state(
    state: GaussianPureState,
    r_true: float = 0.0,
    lambda_halfwidth: float | None = None,
    n_lambda: int = 2**14,
    mu_grid: GridSpec | None = None,
    t_grid: GridSpec | None = None,
    route: str = "auto",
) -> ShiftDistribution:
    """Full pipeline chi -> g -> p for a Gaussian state.

    ``route`` selects how the spectral density is computed: ``"charfn"``
    (analytic characteristic function), ``"mellin"`` (squeezed wavefunction
    through the eigenfunction route), or ``"auto"`` (charfn for ``r_true = 0``,
    mellin otherwise).  The charfn route would make covariance in ``r_true``
    an algebraic identity, so nonzero true values default to the wavefunction
    route, which establishes it numerically.  Covariance comparisons should
    hold the route fixed: the two routes agree on g only to the route-
    equivalence tolerance, and the square root amplifies that noise in the
    tails of g.
    """
    if route not in ("auto", "charfn", "mellin"):
        raise ValidationError(f"unknown route {route!r}")
    chi = lambda lam: char_fn_analytic(state, lam)
    if mu_grid is None:
        mu_grid = default_mu_grid(chi)
    if route == "auto":
        route = "charfn" if r_true == 0.0 else "mellin"
    if route == "charfn":
        if r_true != 0.0:
            raise ValidationError(
                "the charfn route computes the r_true = 0 distribution; "
                "covariance makes it valid for any true value"
            )
        g = spectral_density_from_charfn(chi, lambda_halfwidth, n_lambda, mu_grid)
    else:
        psi = apply_squeeze(wavefunction(state), r_true)
        g = spectral_density_via_mellin(psi, mu_grid)
    return optimal_distribution(g, t_grid)


def lnx_distribution_for_state(
    state: GaussianPureState,
    r_true: float = 0.0,
    rhat_grid: GridSpec | None = None,
    frame: str = ERROR_FRAME,
) -> ShiftDistribution:
    """ln|X| distribution of a Gaussian state, in the requested frame."""
    dist = lnx_distribution(wavefunction(state), r_true, rhat_grid)
    return to_error_frame(dist) if frame == ERROR_FRAME else dist
