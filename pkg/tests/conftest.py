import numpy as np
import pytest

import sqest as sq

# state set exercised by the normalization / equivalence / unbiasedness suites
STANDARD_STATES = {
    "vacuum": sq.GaussianPureState(0.0, 0.0),
    "coherent-1": sq.GaussianPureState(1.0, 0.0),
    "coherent-2": sq.GaussianPureState(2.0, 0.0),
    "coherent-4": sq.GaussianPureState(4.0, 0.0),
    "displaced-squeezed-minus": sq.GaussianPureState(1.0, -0.5),
    "displaced-squeezed-plus": sq.GaussianPureState(1.0, 0.5),
}


@pytest.fixture(scope="session")
def standard_states():
    return dict(STANDARD_STATES)


@pytest.fixture(scope="session")
def spectral_pair():
    """Both spectral-density routes per standard state, on a shared mu grid."""

    def build(state):
        chi = lambda lam: sq.char_fn_analytic(state, lam)
        mu_grid = sq.default_mu_grid(chi)
        g_charfn = sq.spectral_density_from_charfn(chi, mu_grid=mu_grid)
        g_mellin = sq.spectral_density_via_mellin(sq.wavefunction(state), mu_grid)
        return g_charfn, g_mellin

    return {name: build(state) for name, state in STANDARD_STATES.items()}


@pytest.fixture(scope="session")
def optimal_dists(spectral_pair):
    return {
        name: sq.optimal_distribution(pair[0]) for name, pair in spectral_pair.items()
    }


@pytest.fixture(scope="session")
def lnx_dists():
    return {
        name: sq.lnx_distribution_for_state(state)
        for name, state in STANDARD_STATES.items()
    }


def grid_value_at(dist, t0: float) -> float:
    """Density at the grid point nearest t0."""
    t = dist.t
    return float(dist.p[np.argmin(np.abs(t - t0))])
