"""The chirp-z Fourier quadrature against direct summation and closed forms."""

import numpy as np
import pytest

from sqest import GridSpec, ValidationError
from sqest.fourier import fourier_quadrature


def direct_sum(values, x_grid, w_grid, sign):
    x = x_grid.points()
    w = w_grid.points()
    weights = np.full(x.size, x_grid.step)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    return np.array(
        [np.sum(weights * values * np.exp(sign * 1j * wk * x)) for wk in w]
    )


@pytest.mark.parametrize("sign", [1, -1])
@pytest.mark.parametrize("n_in,n_out", [(33, 17), (128, 200), (257, 64)])
def test_matches_direct_sum(sign, n_in, n_out):
    rng = np.random.default_rng(42)
    x_grid = GridSpec(-1.3, 2.1, n_in)
    w_grid = GridSpec(-0.7, 0.9, n_out)
    values = rng.normal(size=n_in) + 1j * rng.normal(size=n_in)
    got = fourier_quadrature(values, x_grid, w_grid, sign)
    want = direct_sum(values, x_grid, w_grid, sign)
    assert np.max(np.abs(got - want)) < 1e-12 * np.max(np.abs(want))


def test_gaussian_closed_form():
    # int exp(-x^2/2) exp(i w x) dx = sqrt(2 pi) exp(-w^2/2)
    x_grid = GridSpec(-12.0, 12.0, 2048)
    w_grid = GridSpec(-4.0, 4.0, 101)
    values = np.exp(-0.5 * x_grid.points() ** 2)
    got = fourier_quadrature(values, x_grid, w_grid, sign=1)
    want = np.sqrt(2 * np.pi) * np.exp(-0.5 * w_grid.points() ** 2)
    # quadrature is exact to chirp-z roundoff at this size (~1e-12 absolute)
    assert np.max(np.abs(got - want)) < 5e-12


def test_rejects_output_beyond_nyquist():
    x_grid = GridSpec(0.0, 1.0, 11)  # dx = 0.1, Nyquist ~ 31.4
    with pytest.raises(ValidationError):
        fourier_quadrature(np.ones(11), x_grid, GridSpec(-40.0, 40.0, 5))


def test_rejects_wrong_sample_count():
    with pytest.raises(ValidationError):
        fourier_quadrature(np.ones(5), GridSpec(0.0, 1.0, 6), GridSpec(0.0, 1.0, 4))


def test_rejects_bad_sign():
    with pytest.raises(ValidationError):
        fourier_quadrature(np.ones(4), GridSpec(0.0, 1.0, 4), GridSpec(0.0, 1.0, 4), sign=2)
