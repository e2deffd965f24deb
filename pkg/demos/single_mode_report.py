"""Print the full single-measurement report for a few standard states.

Run with:  python3 demos/single_mode_report.py
"""

import numpy as np

import phaseinfo as pi


def main():
    states = [
        ("fock n=0 of N=4", pi.fock_state(0, 4)),
        ("uniform pair [1,1]/sqrt(2)", pi.normalize(np.array([1.0, 1.0]))),
        ("sine window N=4", pi.sine_state(4)),
        ("sine window N=8", pi.sine_state(8)),
        ("random N=6 seed=3", pi.random_state(6, 3)),
    ]
    header = "%-28s %12s %12s %12s %12s" % (
        "state", "info [nats]", "fisher", "R", "holevo var")
    print(header)
    print("-" * len(header))
    for label, state in states:
        rep = pi.information_report(state)
        holevo = "inf" if np.isinf(rep.holevo_variance) else "%12.6f" % rep.holevo_variance
        print("%-28s %12.6f %12.6f %12.6f %12s" % (
            label,
            rep.mutual_information,
            rep.fisher_information,
            rep.mean_resultant_length,
            holevo,
        ))
    print()
    print("dimension cap: info never exceeds log(N+1);")
    for n in (1, 4, 8):
        best = pi.mutual_information_single(pi.sine_state(n))
        print("  N=%d  sine window %.6f  vs cap %.6f" % (n, best, np.log(n + 1)))


if __name__ == "__main__":
    main()
