"""Spectral densities: route equivalence, completeness, moments, quality gates."""

import numpy as np
import pytest

import sqest as sq
from sqest.spectral import NEG_CLAMP
from oracles import G_VAC_0, K_MEAN_ALPHA_1_1J, K_VAR_VACUUM, fock_generator_moments


def vacuum_chi(lam):
    return sq.char_fn_analytic(sq.VACUUM, lam)


class TestFromCharfn:
    def test_vacuum_even_and_normalized(self, spectral_pair):
        g = spectral_pair["vacuum"][0]
        assert g.norm() == pytest.approx(1.0, abs=1e-4)
        assert np.max(np.abs(g.g - g.g[::-1])) < 1e-8

    def test_vacuum_peak_closed_form(self, spectral_pair):
        g = spectral_pair["vacuum"][0]
        at_zero = g.g[np.argmin(np.abs(g.mu))]
        assert at_zero == pytest.approx(G_VAC_0, abs=1e-6)

    def test_vacuum_generator_moments(self, spectral_pair):
        g = spectral_pair["vacuum"][0]
        assert g.mean() == pytest.approx(0.0, abs=1e-8)
        assert g.std() ** 2 == pytest.approx(K_VAR_VACUUM, abs=1e-4)

    def test_reciprocal_default_grid(self):
        g = sq.spectral_density_from_charfn(vacuum_chi)
        assert g.n_points == 2**14
        assert g.norm() == pytest.approx(1.0, abs=1e-4)

    def test_requires_power_of_two(self):
        with pytest.raises(sq.ValidationError):
            sq.spectral_density_from_charfn(vacuum_chi, n_lambda=1000)

    def test_truncation_gate(self):
        with pytest.raises(sq.TruncationError):
            sq.spectral_density_from_charfn(vacuum_chi, lambda_halfwidth=5.0)

    def test_negative_density_aborts(self):
        # not a valid characteristic function: its transform dips well below 0
        bad_chi = lambda lam: np.exp(-(np.asarray(lam) ** 2) / 2) * (
            2 * np.cos(3 * np.asarray(lam)) - 0.9
        ) / 1.1
        with pytest.raises(sq.NumericalQualityError):
            sq.spectral_density_from_charfn(bad_chi, mu_grid=sq.GridSpec(-30, 30, 4096))

    def test_adaptive_halfwidth_vacuum(self):
        # |chi_vac| = sqrt(2 sech) decays like e^(-lam/2); cutoff lands near 40
        half = sq.adaptive_halfwidth(vacuum_chi)
        assert 35 < half < 45
        assert abs(vacuum_chi(half)) < 1e-8


class TestMellinRoute:
    def test_vacuum_even(self, spectral_pair):
        g = spectral_pair["vacuum"][1]
        assert np.max(np.abs(g.g - g.g[::-1])) < 1e-8

    def test_vacuum_equal_half_line_weights(self):
        from sqest.spectral import _mellin_amplitude

        psi = sq.wavefunction(sq.VACUUM)
        mu_grid = sq.GridSpec(-40.0, 40.0, 2048)
        a_plus = _mellin_amplitude(psi, 1, mu_grid)
        a_minus = _mellin_amplitude(psi, -1, mu_grid)
        assert np.max(np.abs(np.abs(a_plus) ** 2 - np.abs(a_minus) ** 2)) < 1e-10

    def test_default_grid_normalizes(self):
        g = sq.spectral_density_via_mellin(sq.wavefunction(sq.GaussianPureState(1.0, 0.0)))
        assert g.norm() == pytest.approx(1.0, abs=1e-4)

    def test_one_sided_support(self):
        # grid entirely at x > 0: the s = -1 amplitude must vanish
        psi = sq.wavefunction(sq.GaussianPureState(6.0, 0.0))
        assert psi.x_min > 0
        g = sq.spectral_density_via_mellin(psi)
        assert g.norm() == pytest.approx(1.0, abs=1e-4)


class TestRouteEquivalence:
    def test_standard_states(self, spectral_pair):
        for name, (g_charfn, g_mellin) in spectral_pair.items():
            sup = np.max(np.abs(g_charfn.g - g_mellin.g))
            assert sup < 1e-5, f"{name}: routes differ by {sup:.2e}"

    def test_complex_state(self):
        state = sq.GaussianPureState(1.0 + 1.0j, -0.3)
        chi = lambda lam: sq.char_fn_analytic(state, lam)
        mu_grid = sq.default_mu_grid(chi)
        g1 = sq.spectral_density_from_charfn(chi, mu_grid=mu_grid)
        g2 = sq.spectral_density_via_mellin(sq.wavefunction(state), mu_grid)
        assert np.max(np.abs(g1.g - g2.g)) < 1e-5


class TestInvariants:
    def test_squeeze_invariance(self):
        psi = sq.wavefunction(sq.VACUUM)
        mu_grid = sq.default_mu_grid(vacuum_chi)
        base = sq.spectral_density_via_mellin(psi, mu_grid)
        for r0 in (-0.5, 0.3):
            moved = sq.spectral_density_via_mellin(sq.apply_squeeze(psi, r0), mu_grid)
            assert np.max(np.abs(moved.g - base.g)) < 1e-6

    def test_first_moment_real_states(self, spectral_pair):
        # <K> vanishes for every real-parameter Gaussian state (oracle-checked)
        for name, (g, _) in spectral_pair.items():
            alpha = {"vacuum": 0.0, "coherent-1": 1.0, "coherent-2": 2.0,
                     "coherent-4": 4.0, "displaced-squeezed-minus": 1.0,
                     "displaced-squeezed-plus": 1.0}[name]
            z = {"displaced-squeezed-minus": -0.5, "displaced-squeezed-plus": 0.5}.get(name, 0.0)
            want, _ = fock_generator_moments(alpha, z)
            assert want == pytest.approx(0.0, abs=1e-10)
            assert g.mean() == pytest.approx(want, abs=1e-6)

    def test_first_moment_complex_state(self):
        state = sq.GaussianPureState(1.0 + 1.0j, 0.0)
        chi = lambda lam: sq.char_fn_analytic(state, lam)
        g = sq.spectral_density_from_charfn(chi, mu_grid=sq.default_mu_grid(chi))
        want, _ = fock_generator_moments(state.alpha, 0.0)
        assert want == pytest.approx(K_MEAN_ALPHA_1_1J, abs=1e-9)
        assert g.mean() == pytest.approx(want, abs=1e-6)

    def test_second_moment_against_oracle(self, spectral_pair):
        g = spectral_pair["coherent-2"][0]
        _, var = fock_generator_moments(2.0, 0.0)
        assert g.std() ** 2 == pytest.approx(var, rel=1e-4)


class TestSpectralDensityType:
    def test_rejects_negative(self):
        with pytest.raises(sq.ValidationError):
            sq.SpectralDensity(-1.0, 1.0, np.array([0.5, -0.1, 0.5]))

    def test_rejects_bad_normalization(self):
        mu = sq.GridSpec(-10, 10, 501)
        g = np.exp(-mu.points() ** 2)  # integrates to sqrt(pi)
        with pytest.raises(sq.NormalizationError):
            sq.SpectralDensity(mu.lo, mu.hi, g)

    def test_clamp_metadata_recorded(self, spectral_pair):
        g = spectral_pair["vacuum"][0]
        assert g.metadata.max_imag_residue < 1e-6
        assert g.metadata.clamped_points >= 0
        assert NEG_CLAMP < 0
