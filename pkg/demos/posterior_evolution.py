"""Watch a flat prior sharpen as canonical-measurement outcomes accumulate.

Draw a batch of outcomes at a hidden true phase, then replay them one at a
time and track the posterior's entropy, information gain, and circular
moments.  With matplotlib installed a small figure lands in posterior.png.

Run with:  python3 demos/posterior_evolution.py
"""

import numpy as np

import phaseinfo as pi

TRUE_PHASE = 2.1
SHOTS = 40
SEED = 11


def main():
    state = pi.normalize(np.array([1.0, 1.0]))
    record = pi.sample_outcomes(state, TRUE_PHASE, SHOTS, SEED)
    grid = 4096

    print("true phase %.4f rad, %d outcomes, seed %d" % (TRUE_PHASE, SHOTS, SEED))
    print("%6s %12s %12s %12s %12s" % ("shots", "entropy", "info gain", "mean dir", "holevo var"))
    checkpoints = [1, 2, 5, 10, 20, 40]
    entropies = []
    for k in range(1, SHOTS + 1):
        post = pi.posterior_from_outcomes(state, record.outcomes[:k], grid)
        h = pi.entropy(post)
        entropies.append(h)
        if k in checkpoints:
            mom = pi.circular_moments(post)
            print("%6d %12.6f %12.6f %12.6f %12.6f" % (
                k, h, pi.LOG_TWO_PI - h, mom.mean_direction, mom.holevo_variance))

    final = pi.posterior_from_outcomes(state, record.outcomes, grid)
    mom = pi.circular_moments(final)
    err = np.angle(np.exp(1j * (mom.mean_direction - TRUE_PHASE)))
    print()
    print("final mean direction %.6f, true phase %.6f, wrapped error %+.6f"
          % (mom.mean_direction, TRUE_PHASE, err))

    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("matplotlib not installed, skipping the figure")
        return
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.2))
    ax1.plot(range(1, SHOTS + 1), entropies)
    ax1.axhline(pi.LOG_TWO_PI, ls=":", c="gray")
    ax1.set_xlabel("outcomes")
    ax1.set_ylabel("posterior entropy [nats]")
    angles = pi.grid_angles(grid)
    ax2.plot(angles, final.values)
    ax2.axvline(TRUE_PHASE, ls=":", c="gray")
    ax2.set_xlabel("phase [rad]")
    ax2.set_ylabel("posterior density")
    fig.tight_layout()
    fig.savefig("posterior.png", dpi=120)
    print("wrote posterior.png")


if __name__ == "__main__":
    main()
