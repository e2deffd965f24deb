"""Monte-Carlo information from M repeated measurements vs its references.

For the best single-photon state the expected information gain is estimated
at M = 1..64 and set against the linear chain bound M*I1 and the Gaussian
asymptote log(2 pi) + 0.5*log(M F / (2 pi e)).  The chain bound is tight for
small M and useless for large M; the asymptote is the opposite.  Note the
estimate passes log(2 pi) without ceremony once M F > 2 pi e: differential
information carries no prior-entropy ceiling.

Writes bounds_curve.csv (and bounds.png with matplotlib).

Run with:  python3 demos/repeated_measurements.py   (about a minute)
"""

import numpy as np

import phaseinfo as pi

MODES = [1, 2, 4, 8, 16, 32, 64]
TRIALS = 300
SEED = 5


def main():
    state = pi.normalize(np.array([1.0, 1.0]))
    print("%4s %14s %10s %14s %14s" % ("M", "mc info", "stderr", "chain M*I1", "asymptote"))
    rows = []
    for m in MODES:
        rep = pi.bound_report(state, m, trials=TRIALS, seed=SEED)
        print("%4d %14.6f %10.6f %14.6f %14.6f" % (
            m, rep.mc_information, rep.mc_stderr, rep.chain_upper_bound, rep.asymptotic_value))
        rows.append(rep)

    crossover = 2 * np.pi * np.e / rows[0].fisher
    print()
    print("log(2 pi) = %.6f is crossed near M = %.1f (M F = 2 pi e)"
          % (pi.LOG_TWO_PI, crossover))

    with open("bounds_curve.csv", "w") as fh:
        fh.write("M,mc_information,mc_stderr,chain_bound,asymptote\n")
        for rep in rows:
            fh.write("%d,%s,%s,%s,%s\n" % (
                rep.modes,
                pi.format_float(rep.mc_information),
                pi.format_float(rep.mc_stderr),
                pi.format_float(rep.chain_upper_bound),
                pi.format_float(rep.asymptotic_value),
            ))
    print("wrote bounds_curve.csv")

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        return
    ms = [r.modes for r in rows]
    fig, ax = plt.subplots(figsize=(5, 3.4))
    ax.errorbar(ms, [r.mc_information for r in rows],
                yerr=[3 * r.mc_stderr for r in rows], fmt="o-", label="Monte Carlo")
    ax.plot(ms, [r.chain_upper_bound for r in rows], "--", label="chain bound")
    ax.plot(ms, [r.asymptotic_value for r in rows], ":", label="asymptote")
    ax.axhline(pi.LOG_TWO_PI, c="gray", lw=0.8)
    ax.set_xscale("log", base=2)
    ax.set_ylim(0, 3.2)
    ax.set_xlabel("measurements M")
    ax.set_ylabel("information [nats]")
    ax.legend()
    fig.tight_layout()
    fig.savefig("bounds.png", dpi=120)
    print("wrote bounds.png")


if __name__ == "__main__":
    main()
