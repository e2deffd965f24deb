"""Canonical phase measurement: outcome likelihood and simulation.

The canonical measurement of a truncated state has outcome density

    P(x | theta) = |sum_n c_n exp(i n (x - theta))|^2 / (2 pi),

a covariant family: only the offset x - theta matters.  Sampling inverts the
piecewise-linear CDF built from the density on a uniform grid; within a grid
cell the density is taken constant, so the interpolated draw is exactly
uniform inside the cell and the estimator built on these draws is unbiased
for the gridded density.
"""

from dataclasses import dataclass

import numpy as np

from .circular import canonical_density, grid_angles, validate_grid_size
from .errors import ConfigurationError
from .states import TWO_PI, phase_amplitude

__all__ = [
    "likelihood_density",
    "PhaseLikelihood",
    "density_grid",
    "MeasurementRecord",
    "sample_outcomes",
    "record_to_dict",
    "save_record",
]


def likelihood_density(state, delta):
    """Outcome density at offset delta = x - theta (scalar or array).

    Periodic with period 2 pi; inputs are reduced modulo 2 pi before use so
    huge arguments lose no precision inside the complex exponentials.
    """
    delta = np.mod(np.asarray(delta, dtype=np.float64), TWO_PI)
    amp = phase_amplitude(state, delta)
    return np.abs(amp) ** 2 / TWO_PI


def density_grid(state, grid_size):
    """Canonical density at the uniform grid nodes, as a CircularDensity."""
    return canonical_density(state, grid_size)


@dataclass(frozen=True)
class PhaseLikelihood:
    """A state's canonical measurement, bundled with its working grid."""

    state: object
    grid_size: int = 4096

    def __post_init__(self):
        validate_grid_size(self.grid_size)

    def density(self, delta):
        return likelihood_density(self.state, delta)

    def grid(self):
        return density_grid(self.state, self.grid_size)

    def sample(self, true_phase, count, seed):
        return sample_outcomes(
            self.state, true_phase, count, seed, grid_size=self.grid_size
        )


@dataclass(frozen=True)
class MeasurementRecord:
    """Outcomes of repeated canonical measurements at one true phase.

    ``true_phase`` is stored reduced to [0, 2 pi); ``outcomes`` is read-only
    and every entry lies in [0, 2 pi).
    """

    true_phase: float
    outcomes: np.ndarray
    seed: int

    def __post_init__(self):
        object.__setattr__(self, "true_phase", float(np.mod(self.true_phase, TWO_PI)))
        outs = np.asarray(self.outcomes, dtype=np.float64)
        if outs.ndim != 1 or outs.size == 0:
            raise ConfigurationError("outcomes must form a non-empty 1-d array")
        if np.any(outs < 0.0) or np.any(outs >= TWO_PI):
            raise ConfigurationError("outcomes must lie in [0, 2 pi)")
        outs = outs.copy()
        outs.flags.writeable = False
        object.__setattr__(self, "outcomes", outs)
        object.__setattr__(self, "seed", int(self.seed))

    @property
    def count(self):
        return self.outcomes.size


def _draw_outcomes(state, true_phase, count, rng, grid_size):
    """Inverse-CDF draws from the gridded outcome density, given an RNG."""
    g = validate_grid_size(grid_size)
    nodes = grid_angles(g)
    density = likelihood_density(state, nodes - true_phase)
    cdf = np.concatenate(([0.0], np.cumsum(density) * TWO_PI / g))
    cdf /= cdf[-1]
    u = rng.random(count)
    idx = np.searchsorted(cdf, u, side="right") - 1
    idx = np.clip(idx, 0, g - 1)
    cell_mass = cdf[idx + 1] - cdf[idx]
    frac = np.where(cell_mass > 0.0, (u - cdf[idx]) / np.where(cell_mass > 0.0, cell_mass, 1.0), 0.0)
    return np.mod(nodes[idx] + frac * (TWO_PI / g), TWO_PI)


def sample_outcomes(state, true_phase, count, seed, grid_size=4096):
    """Simulate ``count`` canonical outcomes at a fixed true phase.

    Parameters
    ----------
    state : StateVector
    true_phase : float
        True phase in radians (any real; reduced mod 2 pi).
    count : int
        Number of outcomes, at least 1.
    seed : int
        Seeds a fresh PCG64 generator; identical arguments give identical
        records.
    grid_size : int
        Resolution of the inverse-CDF table.

    Returns
    -------
    MeasurementRecord
    """
    if count < 1:
        raise ConfigurationError("count must be at least 1, got %r" % (count,))
    rng = np.random.default_rng(seed)
    outs = _draw_outcomes(state, float(true_phase), int(count), rng, grid_size)
    return MeasurementRecord(true_phase=float(true_phase), outcomes=outs, seed=int(seed))


def record_to_dict(record):
    """JSON-ready mapping: {"true_phase": ..., "outcomes": [...], "seed": ...}."""
    return {
        "true_phase": float(record.true_phase),
        "outcomes": [float(x) for x in record.outcomes],
        "seed": int(record.seed),
    }


def save_record(record, path):
    from .serialize import dumps_json

    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_json(record_to_dict(record)))
