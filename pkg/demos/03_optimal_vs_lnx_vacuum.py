"""Optimal measurement vs the ln|X| rival on the vacuum.

The optimal covariant measurement yields a symmetric, unbiased error
distribution.  Measuring ln|X| instead gives a visibly skewed distribution
whose mean sits at ln(1/2) - (euler_gamma + ln 2)/2 ~ -1.328 below the true
value: neither its mean nor its most likely outcome is the true parameter.
"""

import math

import numpy as np

import sqest as sq


def main():
    optimal = sq.optimal_distribution_for_state(sq.VACUUM)
    lnx = sq.lnx_distribution_for_state(sq.VACUUM)

    print("-- vacuum input, error variable t = rhat - r " + "-" * 27)
    closed_form = math.log(0.5) - (np.euler_gamma + math.log(2)) / 2
    for label, dist in [("optimal", optimal), ("ln|X|", lnx)]:
        s = dist.summary
        print(f"{label:8s} mean = {s.mean:+.6f}   mode = {s.mode:+.6f}   "
              f"rmse = {s.rmse:.6f}   captured = {s.captured:.6f}")
    print(f"\nln|X| mean closed form: {closed_form:+.6f}")
    print(f"optimal asymmetry  max|p(t) - p(-t)| = "
          f"{np.max(np.abs(optimal.p - optimal.p[::-1])):.2e}")
    print(f"ln|X| asymmetry    max|p(t) - p(-t)| = "
          f"{np.max(np.abs(lnx.p - lnx.p[::-1])):.3f}")

    print("\n-- coarse sketch of the two densities " + "-" * 34)
    t_probe = np.linspace(-3.0, 1.5, 10)
    print(f"{'t':>6s} {'p_optimal':>10s} {'p_lnx':>10s}")
    for t0 in t_probe:
        p_o = optimal.p[np.argmin(np.abs(optimal.t - t0))]
        p_l = lnx.p[np.argmin(np.abs(lnx.t - t0))]
        bar = "#" * int(30 * p_l) + "." * int(30 * p_o)
        print(f"{t0:6.2f} {p_o:10.4f} {p_l:10.4f}  {bar}")

    print("\nCLI equivalents:")
    print("  sqest dist --state vacuum --strategy optimal -o optimal.csv")
    print("  sqest dist --state vacuum --strategy lnx -o lnx.csv")


if __name__ == "__main__":
    main()
