"""Expected costs of estimation strategies for the admissible cost class.

Admissible costs are of the form ``c(t) = int_0^inf a(mu) cos(mu t) dmu`` with
``a <= 0``.  Two members are built in:

* maximum likelihood, ``c(t) = -delta(t)``, whose expected value is the
  negative density at zero error;
* fidelity, ``c(t) = 1 - |chi(t)|^2``, evaluated directly from the
  characteristic function of the input state.

A user-supplied coefficient table is integrated by nested quadrature.
Expected costs are taken over error-frame distributions only: covariance of
the strategies makes them independent of the true parameter value.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import trapezoid

from .errors import FrameError, ValidationError
from .estimators import ERROR_FRAME, ShiftDistribution

MAX_LIKELIHOOD = "max-likelihood"
FIDELITY = "fidelity"
HOLEVO_TABLE = "holevo-table"
_KINDS = (MAX_LIKELIHOOD, FIDELITY, HOLEVO_TABLE)


@dataclass(frozen=True, eq=False)
class CostFunction:
    """A cost criterion: one of the two built-ins or a sampled coefficient table."""

    kind: str
    mu: np.ndarray | None = None
    a: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValidationError(f"unknown cost kind {self.kind!r}; expected one of {_KINDS}")
        if self.kind != HOLEVO_TABLE:
            if self.mu is not None or self.a is not None:
                raise ValidationError(f"{self.kind} cost takes no coefficient table")
            return
        if self.mu is None or self.a is None:
            raise ValidationError("holevo-table cost requires mu and a arrays")
        mu = np.asarray(self.mu, dtype=float)
        a = np.asarray(self.a, dtype=float)
        if mu.ndim != 1 or mu.shape != a.shape or mu.size < 2:
            raise ValidationError("coefficient table needs matching 1-d mu and a arrays")
        if not (np.all(np.isfinite(mu)) and np.all(np.isfinite(a))):
            raise ValidationError("coefficient table must be finite")
        if np.any(np.diff(mu) <= 0) or mu[0] < 0:
            raise ValidationError("mu grid must be ascending and nonnegative")
        if np.any(a[mu > 0] > 0):
            raise ValidationError("coefficients must satisfy a(mu) <= 0 for mu > 0")
        mu.setflags(write=False)
        a.setflags(write=False)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "a", a)

    @classmethod
    def max_likelihood(cls) -> "CostFunction":
        return cls(MAX_LIKELIHOOD)

    @classmethod
    def fidelity(cls) -> "CostFunction":
        return cls(FIDELITY)

    @classmethod
    def holevo_table(cls, mu, a) -> "CostFunction":
        return cls(HOLEVO_TABLE, np.asarray(mu, dtype=float), np.asarray(a, dtype=float))


def expected_cost(dist: ShiftDistribution, cost: CostFunction, chi=None) -> float:
    """Expected cost of a strategy whose error distribution is ``dist``.

    Parameters
    ----------
    dist : ShiftDistribution
        Must be in the error frame (``FrameError`` otherwise); by covariance
        one evaluation covers every true value.
    cost : CostFunction
    chi : callable, optional
        Characteristic function of the input state; required for the fidelity
        cost only.
    """
    if dist.frame != ERROR_FRAME:
        raise FrameError("expected_cost requires an error-frame distribution")
    t = dist.t
    p = dist.p
    if cost.kind == MAX_LIKELIHOOD:
        # -delta(t): negative density at the grid point nearest t = 0
        return -float(p[np.argmin(np.abs(t))])
    if cost.kind == FIDELITY:
        if chi is None:
            raise ValidationError("fidelity cost requires the characteristic function chi")
        chi_vals = np.asarray(chi(t), dtype=complex)
        if chi_vals.shape != t.shape:
            chi_vals = np.array([chi(v) for v in t], dtype=complex)
        return float(trapezoid(p * (1.0 - np.abs(chi_vals) ** 2), dx=dist.dt))
    # holevo-table: c(t) = int a(mu) cos(mu t) dmu, then int p c dt
    c_of_t = np.empty_like(t)
    for start in range(0, t.size, 2048):
        block = t[start : start + 2048]
        c_of_t[start : start + 2048] = trapezoid(
            cost.a[:, None] * np.cos(cost.mu[:, None] * block[None, :]), cost.mu, axis=0
        )
    return float(trapezoid(p * c_of_t, dx=dist.dt))
