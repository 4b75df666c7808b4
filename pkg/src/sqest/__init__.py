"""Estimation of a single-mode squeezing parameter.

Given a known pure input state, this package computes the outcome
distribution of the optimal covariant measurement of the squeezing parameter,
compares it with the biased ``ln|X|`` strategy and with Monte Carlo homodyne
detection, evaluates expected costs for the admissible cost class, and
benchmarks the asymptotic error-scaling laws.  See the README for the
pipeline and the ``sqest`` command-line interface.
"""

from .costs import CostFunction, expected_cost
from .errors import (
    FrameError,
    GridTooSmallError,
    NormalizationError,
    NumericalQualityError,
    SqestError,
    SupportOverflowError,
    TruncationError,
    ValidationError,
    WindowCaptureError,
)
from .estimators import (
    DistributionSummary,
    HomodyneSummary,
    ShiftDistribution,
    homodyne_mc,
    lnx_distribution,
    lnx_distribution_for_state,
    optimal_distribution,
    optimal_distribution_for_state,
    summarize,
    to_absolute_frame,
    to_error_frame,
)
from .grids import GridSpec
from .scaling import Allocation, SweepPoint, SweepResult, optimal_allocation, rmse_sweep
from .spectral import (
    SpectralDensity,
    SpectralMetadata,
    adaptive_halfwidth,
    default_mu_grid,
    spectral_density_from_charfn,
    spectral_density_via_mellin,
)
from .states import (
    VACUUM,
    GaussianPureState,
    WavefunctionGrid,
    apply_squeeze,
    char_fn_analytic,
    char_fn_numeric,
    effective_displacement,
    mean_photon_number,
    quadrature_mean,
    quadrature_std,
    wavefunction,
)

__version__ = "0.1.0"

__all__ = [
    "Allocation",
    "CostFunction",
    "DistributionSummary",
    "FrameError",
    "GaussianPureState",
    "GridSpec",
    "GridTooSmallError",
    "HomodyneSummary",
    "NormalizationError",
    "NumericalQualityError",
    "ShiftDistribution",
    "SpectralDensity",
    "SpectralMetadata",
    "SqestError",
    "SupportOverflowError",
    "SweepPoint",
    "SweepResult",
    "TruncationError",
    "VACUUM",
    "ValidationError",
    "WavefunctionGrid",
    "WindowCaptureError",
    "adaptive_halfwidth",
    "apply_squeeze",
    "char_fn_analytic",
    "char_fn_numeric",
    "default_mu_grid",
    "effective_displacement",
    "expected_cost",
    "homodyne_mc",
    "lnx_distribution",
    "lnx_distribution_for_state",
    "mean_photon_number",
    "optimal_allocation",
    "optimal_distribution",
    "optimal_distribution_for_state",
    "quadrature_mean",
    "quadrature_std",
    "rmse_sweep",
    "spectral_density_from_charfn",
    "spectral_density_via_mellin",
    "summarize",
    "to_absolute_frame",
    "to_error_frame",
    "wavefunction",
]
