"""Expected costs and strategy dominance.

Admissible cost functions have the cosine-integral form with nonpositive
coefficients; maximum likelihood (-delta) and fidelity (1 - |chi|^2) are the
built-in members.  For every admissible cost, the optimal covariant
measurement is at least as good as ln|X|, with a strict gap for maximum
likelihood.
"""

import numpy as np

import sqest as sq
from sqest import CostFunction, expected_cost

STATES = {
    "vacuum": sq.VACUUM,
    "coherent alpha=1": sq.GaussianPureState(1.0, 0.0),
    "coherent alpha=2": sq.GaussianPureState(2.0, 0.0),
}


def main():
    ml = CostFunction.max_likelihood()
    fid = CostFunction.fidelity()

    print(f"{'state':20s} {'ML optimal':>11s} {'ML lnx':>9s} "
          f"{'fid optimal':>12s} {'fid lnx':>9s}")
    for label, state in STATES.items():
        chi = lambda lam: sq.char_fn_analytic(state, lam)
        opt = sq.optimal_distribution_for_state(state)
        lnx = sq.lnx_distribution_for_state(state)
        row = (
            expected_cost(opt, ml),
            expected_cost(lnx, ml),
            expected_cost(opt, fid, chi),
            expected_cost(lnx, fid, chi),
        )
        print(f"{label:20s} {row[0]:11.4f} {row[1]:9.4f} {row[2]:12.4f} {row[3]:9.4f}")
    print("\n(lower is better; the optimal strategy dominates in every column pair)")

    print("\n-- user-supplied coefficient table " + "-" * 37)
    # a(mu) = -exp(-mu) integrates to the Lorentzian cost c(t) = -1/(1 + t^2)
    mu = np.linspace(0.0, 40.0, 2001)
    table = CostFunction.holevo_table(mu, -np.exp(-mu))
    opt = sq.optimal_distribution_for_state(sq.VACUUM)
    lnx = sq.lnx_distribution_for_state(sq.VACUUM)
    print(f"Lorentzian-cost optimal: {expected_cost(opt, table):+.6f}")
    print(f"Lorentzian-cost ln|X|:   {expected_cost(lnx, table):+.6f}")

    print("\nCLI equivalents:")
    print("  sqest cost --state vacuum --strategy optimal --cost max-likelihood")
    print("  sqest cost --state vacuum --strategy lnx --cost fidelity")


if __name__ == "__main__":
    main()
