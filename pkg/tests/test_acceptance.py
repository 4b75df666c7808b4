"""Acceptance suite: one test per release criterion, at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to get one PASS line per
criterion.  The standard state set is vacuum, coherent amplitudes 1, 2 and 4,
and the displaced squeezed states (1, -0.5) and (1, +0.5).
"""

import json
import math
import subprocess
import sys

import numpy as np
import pytest

import sqest as sq
from conftest import grid_value_at
from oracles import LNX_VAC_MEAN


def report(criterion: str) -> None:
    print(f"ACCEPTANCE PASS - {criterion}")


def test_01_normalization_suite(spectral_pair, optimal_dists, lnx_dists):
    """Every spectral density and distribution integrates to 1 within 1e-3."""
    for name, (g_charfn, g_mellin) in spectral_pair.items():
        assert abs(g_charfn.norm() - 1.0) < 1e-3, f"charfn g for {name}"
        assert abs(g_mellin.norm() - 1.0) < 1e-3, f"mellin g for {name}"
    for name, dist in optimal_dists.items():
        assert abs(dist.summary.captured - 1.0) < 1e-3, f"optimal dist for {name}"
    for name, dist in lnx_dists.items():
        assert abs(dist.summary.captured - 1.0) < 1e-3, f"lnx dist for {name}"
    report("1: normalization of every density and distribution within 1e-3")


def test_02_route_equivalence(spectral_pair):
    """The two spectral-density routes agree within 1e-5 sup-norm."""
    worst = 0.0
    for name, (g_charfn, g_mellin) in spectral_pair.items():
        sup = float(np.max(np.abs(g_charfn.g - g_mellin.g)))
        worst = max(worst, sup)
        assert sup < 1e-5, f"{name}: {sup:.2e}"
    report(f"2: route equivalence within 1e-5 sup-norm (worst {worst:.2e})")


def test_03_unbiasedness(optimal_dists):
    """Optimal distribution: |mean| < 1e-3 and mode within one grid step of 0."""
    for name, dist in optimal_dists.items():
        s = dist.summary
        assert abs(s.mean) < 1e-3, f"{name}: mean {s.mean}"
        assert abs(s.mode) <= dist.dt + 1e-15, f"{name}: mode {s.mode}"
    report("3: optimal estimation unbiased on the standard state set")


def test_04_fig1_analog(optimal_dists, lnx_dists):
    """Vacuum: biased ln|X| mean at its closed form, optimal symmetric."""
    lnx = lnx_dists["vacuum"]
    assert lnx.summary.mean == pytest.approx(LNX_VAC_MEAN, abs=1e-2)
    p_opt = optimal_dists["vacuum"].p
    assert np.max(np.abs(p_opt - p_opt[::-1])) < 1e-6
    asym = np.max(np.abs(lnx.p - lnx.p[::-1]))
    assert asym > 0.1
    report(
        f"4: vacuum ln|X| mean {lnx.summary.mean:.4f} (closed form {LNX_VAC_MEAN:.4f}), "
        f"optimal symmetric, ln|X| asymmetry {asym:.3f} > 0.1"
    )


def test_05_fig2_analog(optimal_dists):
    """Optimal density at zero error strictly increases over alpha = 1, 2, 4."""
    peaks = [grid_value_at(optimal_dists[f"coherent-{a}"], 0.0) for a in (1, 2, 4)]
    assert peaks[0] < peaks[1] < peaks[2]
    report(f"5: p(0) strictly increasing over alpha = 1, 2, 4: {np.round(peaks, 4)}")


def test_06_asymptotic_gaussian():
    """Coherent alpha = 6: distribution near its Gaussian limit, rmse near 1/(2 alpha)."""
    alpha = 6.0
    dist = sq.optimal_distribution_for_state(sq.GaussianPureState(alpha, 0.0))
    t = dist.t
    gauss = math.sqrt(2 * alpha**2 / math.pi) * np.exp(-2 * alpha**2 * t**2)
    sup_rel = float(np.max(np.abs(dist.p - gauss))) / float(gauss.max())
    assert sup_rel <= 0.05
    rmse = dist.summary.rmse
    assert rmse == pytest.approx(1 / (2 * alpha), rel=0.03)
    report(
        f"6: alpha=6 sup-distance {100 * sup_rel:.2f}% of peak (<= 5%), "
        f"rmse {rmse:.5f} vs {1 / (2 * alpha):.5f} within 3%"
    )


def test_07_scaling_fits():
    """Slope -0.5 for coherent/optimal and -1 for allocated/homodyne sweeps."""
    nbars = [4, 16, 64, 256]
    coh = sq.rmse_sweep("coherent", nbars, "optimal-povm")
    assert coh.slope == pytest.approx(-0.5, abs=0.05)
    mc = sq.rmse_sweep(
        "displaced-squeezed-optimal", nbars, "homodyne-mc", n_samples=100_000, seed=0
    )
    assert mc.slope == pytest.approx(-1.0, abs=0.07)
    report(
        f"7: coherent optimal slope {coh.slope:.4f} (-0.5 +- 0.05), "
        f"allocated homodyne slope {mc.slope:.4f} (-1 +- 0.07)"
    )


def test_08_optimality_dominance(optimal_dists, lnx_dists, standard_states):
    """Optimal expected costs dominate ln|X|; strict for max likelihood."""
    ml = sq.CostFunction.max_likelihood()
    fid = sq.CostFunction.fidelity()
    for name in ("vacuum", "coherent-1", "coherent-2"):
        chi = lambda lam: sq.char_fn_analytic(standard_states[name], lam)
        ml_opt = sq.expected_cost(optimal_dists[name], ml)
        ml_lnx = sq.expected_cost(lnx_dists[name], ml)
        assert ml_opt <= ml_lnx - 0.05 * abs(ml_lnx), f"{name} max-likelihood"
        fid_opt = sq.expected_cost(optimal_dists[name], fid, chi)
        fid_lnx = sq.expected_cost(lnx_dists[name], fid, chi)
        assert fid_opt <= fid_lnx, f"{name} fidelity"
    report("8: optimal <= ln|X| for both costs, >= 5% margin for max likelihood")


def test_09_covariance():
    """Distributions recomputed at shifted true values move exactly as required."""
    state = sq.GaussianPureState(1.0, 0.0)
    base_opt = sq.optimal_distribution_for_state(state, 0.0, route="mellin")
    psi = sq.wavefunction(state)
    base_lnx = sq.lnx_distribution(psi, 0.0)
    worst_opt = worst_lnx = 0.0
    for r0 in (-0.5, 0.3):
        moved = sq.optimal_distribution_for_state(state, r0, route="mellin")
        worst_opt = max(worst_opt, float(np.max(np.abs(moved.p - base_opt.p))))
        shifted = sq.lnx_distribution(psi, r0)
        assert shifted.t_min == pytest.approx(base_lnx.t_min + r0, abs=1e-12)
        worst_lnx = max(worst_lnx, float(np.max(np.abs(shifted.p - base_lnx.p))))
    assert worst_opt < 1e-6
    assert worst_lnx < 1e-6
    report(
        f"9: error-frame optimal invariant ({worst_opt:.2e}) and absolute-frame "
        f"ln|X| shift-exact ({worst_lnx:.2e}) within 1e-6"
    )


def test_10_cli_determinism(tmp_path):
    """Identical configs and seeds produce byte-identical output files."""
    def run(outdir):
        outdir.mkdir()
        for argv in (
            ["spectral", "--state", "vacuum", "-o", str(outdir / "g.csv")],
            ["dist", "--state", "coherent", "--alpha", "2", "-o", str(outdir / "p.csv")],
            ["mc", "--state", "coherent", "--alpha", "4", "--n-samples", "20000",
             "--seed", "7", "-o", str(outdir / "mc.json")],
        ):
            proc = subprocess.run(
                [sys.executable, "-m", "sqest", *argv], capture_output=True, text=True
            )
            assert proc.returncode == 0, proc.stderr

    run(tmp_path / "first")
    run(tmp_path / "second")
    names = ["g.csv", "g.json", "p.csv", "p.json", "mc.json"]
    for name in names:
        first = (tmp_path / "first" / name).read_bytes()
        second = (tmp_path / "second" / name).read_bytes()
        assert first == second, name
    report(f"10: byte-identical CLI outputs across reruns ({', '.join(names)})")
