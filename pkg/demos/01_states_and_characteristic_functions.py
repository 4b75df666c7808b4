"""States, wavefunctions, and the squeezing characteristic function.

Walks through the state layer: displaced squeezed states, their quadrature
wavefunctions (convention X = (a + a^dag)/2, vacuum variance 1/4), the action
of squeezing on a wavefunction, and the characteristic function
chi(lam) = <psi|S(lam)|psi> computed both in closed form and by quadrature.
"""

import numpy as np
from scipy.integrate import trapezoid

import sqest as sq


def moments(psi):
    density = np.abs(psi.values) ** 2
    mean = trapezoid(psi.x * density, dx=psi.dx)
    var = trapezoid((psi.x - mean) ** 2 * density, dx=psi.dx)
    return mean, var


def main():
    print("-- states and photon numbers " + "-" * 40)
    for label, state in [
        ("vacuum", sq.VACUUM),
        ("coherent alpha=2", sq.GaussianPureState(2.0, 0.0)),
        ("squeezed z=1", sq.GaussianPureState(0.0, 1.0)),
        ("displaced squeezed (1, -0.5)", sq.GaussianPureState(1.0, -0.5)),
    ]:
        print(f"{label:32s} nbar = {sq.mean_photon_number(state):.4f}")

    print("\n-- wavefunction moments (mean, Var X) " + "-" * 30)
    for label, state, want in [
        ("vacuum", sq.VACUUM, (0.0, 0.25)),
        ("coherent alpha=1", sq.GaussianPureState(1.0, 0.0), (1.0, 0.25)),
        ("displaced squeezed (1, -0.5)", sq.GaussianPureState(1.0, -0.5),
         (1.0, np.exp(-1.0) / 4)),
    ]:
        mean, var = moments(sq.wavefunction(state))
        print(f"{label:32s} mean = {mean:+.6f} (expect {want[0]:+.4f})   "
              f"Var = {var:.6f} (expect {want[1]:.6f})")

    print("\n-- squeezing acts as psi(x) -> e^(-r/2) psi(e^(-r) x) " + "-" * 14)
    psi = sq.wavefunction(sq.VACUUM)
    for r in (0.3, -0.4):
        mean, var = moments(sq.apply_squeeze(psi, r))
        print(f"squeeze vacuum by r = {r:+.1f}:  Var X = {var:.6f}  "
              f"(e^(2r)/4 = {np.exp(2 * r) / 4:.6f})")

    print("\n-- characteristic function: closed form vs quadrature " + "-" * 14)
    lam = np.linspace(-6.0, 6.0, 121)
    for label, state in [
        ("vacuum", sq.VACUUM),
        ("coherent alpha=2", sq.GaussianPureState(2.0, 0.0)),
        ("displaced squeezed (1, -0.5)", sq.GaussianPureState(1.0, -0.5)),
    ]:
        analytic = sq.char_fn_analytic(state, lam)
        numeric = sq.char_fn_numeric(sq.wavefunction(state), lam)
        print(f"{label:32s} sup |analytic - numeric| = "
              f"{np.max(np.abs(analytic - numeric)):.2e}")
    print(f"\nchi_vacuum(1) = {sq.char_fn_analytic(sq.VACUUM, 1.0).real:.6f}  "
          f"(1/sqrt(cosh 1) = {1 / np.sqrt(np.cosh(1.0)):.6f})")


if __name__ == "__main__":
    main()
