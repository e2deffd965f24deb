"""Check that number states measure to a flat phase distribution.

A number state carries no phase reference, so its outcome density is uniform
on the circle no matter the true phase.  This script draws 10^5 outcomes,
bins them, and compares each bin against the exact uniform count with a
5 sigma gate.  It doubles as a quick sanity check of the sampler.

Run with:  python3 demos/flat_histogram_check.py
"""

import numpy as np

import phaseinfo as pi

SHOTS = 100_000
BINS = 64


def main():
    state = pi.fock_state(1, 3)
    record = pi.sample_outcomes(state, 0.7, SHOTS, seed=123)
    counts, _ = np.histogram(record.outcomes, bins=BINS, range=(0.0, 2 * np.pi))
    expected = SHOTS / BINS
    sigma = np.sqrt(SHOTS * (1 / BINS) * (1 - 1 / BINS))
    worst = np.max(np.abs(counts - expected))
    print("%d outcomes in %d bins, expected %.1f per bin, sigma %.1f" % (
        SHOTS, BINS, expected, sigma))
    print("largest deviation %.1f counts (%.2f sigma)" % (worst, worst / sigma))
    if worst <= 5 * sigma:
        print("flat within 5 sigma: OK")
    else:
        print("NOT flat, something is wrong with the sampler")
        raise SystemExit(1)


if __name__ == "__main__":
    main()
