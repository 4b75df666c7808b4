"""Asymptotic error-scaling benchmarks.

Coherent inputs reach rms error ``1/(2 sqrt(nbar))``; displaced squeezed
inputs with the balanced allocation ``alpha = sqrt(nbar/2)``,
``z = -ln(2 nbar)/2`` reach ``1/(2 nbar)``.  ``rmse_sweep`` measures either
law, through the exact optimal-measurement pipeline or through Monte Carlo
homodyne, and fits the log-log slope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SqestError, ValidationError
from .estimators import homodyne_mc, optimal_distribution_for_state
from .states import GaussianPureState, mean_photon_number

COHERENT = "coherent"
ALLOCATED = "displaced-squeezed-optimal"
FAMILIES = (COHERENT, ALLOCATED)
OPTIMAL_POVM = "optimal-povm"
HOMODYNE_MC = "homodyne-mc"
METHODS = (OPTIMAL_POVM, HOMODYNE_MC)


@dataclass(frozen=True)
class Allocation:
    """Balanced displaced-squeezed state for a nominal photon budget."""

    state: GaussianPureState
    nominal_nbar: float
    exact_nbar: float


def optimal_allocation(nbar: float) -> Allocation:
    """Resource split achieving the ``1/(2 nbar)`` error scaling.

    Returns the state ``(alpha, z) = (sqrt(nbar/2), -ln(2 nbar)/2)`` together
    with its exact photon number ``alpha^2 + sinh(z)^2``, which matches the
    nominal budget only asymptotically.  The effective displacement
    ``alpha e^{-z}`` equals ``nbar`` exactly.
    """
    nbar = float(nbar)
    if not math.isfinite(nbar) or nbar < 0.5:
        raise ValidationError(f"allocation requires nbar >= 1/2, got {nbar}")
    alpha = math.sqrt(nbar / 2.0)
    z = -0.5 * math.log(2.0 * nbar)
    state = GaussianPureState(alpha, z)
    return Allocation(state, nbar, mean_photon_number(state))


@dataclass(frozen=True)
class SweepPoint:
    nbar: float
    exact_nbar: float
    alpha: float
    z: float
    rmse: float


@dataclass(frozen=True)
class SweepResult:
    """RMSE-vs-photon-number sweep with its fitted log-log power law."""

    family: str
    method: str
    points: tuple[SweepPoint, ...]
    slope: float
    intercept: float
    excluded_first: bool

    @property
    def nbars(self) -> np.ndarray:
        return np.array([pt.nbar for pt in self.points])

    @property
    def rmses(self) -> np.ndarray:
        return np.array([pt.rmse for pt in self.points])


def _state_for(family: str, nbar: float) -> GaussianPureState:
    if family == COHERENT:
        if nbar < 1.0:
            raise ValidationError(f"coherent sweep requires nbar >= 1, got {nbar}")
        return GaussianPureState(math.sqrt(nbar), 0.0)
    return optimal_allocation(nbar).state


def _fit_loglog(nbars: np.ndarray, rmses: np.ndarray) -> tuple[float, float, bool]:
    """Least-squares slope/intercept of ln(rmse) vs ln(nbar).

    The claims being checked are asymptotic, so the smallest point is dropped
    when its residual exceeds 3 standard errors of the full fit.
    """
    log_n = np.log(nbars)
    log_r = np.log(rmses)
    slope, intercept = np.polyfit(log_n, log_r, 1)
    excluded = False
    if nbars.size >= 3:
        residuals = log_r - (slope * log_n + intercept)
        dof = nbars.size - 2
        stderr = math.sqrt(float(np.sum(residuals**2)) / dof) if dof > 0 else 0.0
        if stderr > 0 and abs(residuals[0]) > 3 * stderr:
            slope, intercept = np.polyfit(log_n[1:], log_r[1:], 1)
            excluded = True
    return float(slope), float(intercept), excluded


def rmse_sweep(
    family: str,
    nbars,
    method: str,
    n_samples: int = 100_000,
    seed: int = 0,
    r_true: float = 0.0,
) -> SweepResult:
    """RMSE of an estimation strategy across a photon-number sweep.

    Parameters
    ----------
    family : {"coherent", "displaced-squeezed-optimal"}
    nbars : sequence of float
        Strictly ascending photon budgets (>= 1 coherent, >= 1/2 allocated).
    method : {"optimal-povm", "homodyne-mc"}
        Exact pipeline (chi -> g -> p -> rmse) or Monte Carlo homodyne with
        ``n_samples`` draws per point, one independent seed-derived stream
        per point.
    """
    if family not in FAMILIES:
        raise ValidationError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if method not in METHODS:
        raise ValidationError(f"unknown method {method!r}; expected one of {METHODS}")
    nbars = [float(v) for v in nbars]
    if len(nbars) < 2:
        raise ValidationError("sweep needs at least 2 photon numbers")
    if any(b <= a for a, b in zip(nbars, nbars[1:])):
        raise ValidationError("photon numbers must be strictly ascending")

    streams = np.random.SeedSequence(seed).spawn(len(nbars))
    points = []
    for i, nbar in enumerate(nbars):
        try:
            state = _state_for(family, nbar)
            if method == OPTIMAL_POVM:
                rmse = optimal_distribution_for_state(state, r_true).summary.rmse
            else:
                rmse = homodyne_mc(state, r_true, n_samples, streams[i]).rmse
        except SqestError as exc:
            raise type(exc)(f"sweep point nbar={nbar} failed: {exc}") from exc
        points.append(
            SweepPoint(nbar, mean_photon_number(state), state.alpha.real, state.z, rmse)
        )

    rmses = np.array([pt.rmse for pt in points])
    slope, intercept, excluded = _fit_loglog(np.array(nbars), rmses)
    return SweepResult(family, method, tuple(points), slope, intercept, excluded)
