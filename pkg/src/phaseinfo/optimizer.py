"""Maximizing single-measurement information over states at fixed cutoff.

The objective J(c) = log(2 pi) - H(P_c) is smooth on the unit sphere of
amplitude vectors, invariant under the gauge maps c_n -> exp(i(a + n b)) c_n,
and multimodal for larger cutoffs.  The search is projected gradient ascent:

* Wirtinger gradient of the gridded objective, evaluated with two FFTs;
* projection onto the tangent space of the real unit sphere;
* backtracking line search with an Armijo sufficient-increase test, then a
  parabolic refinement of the accepted step so each iteration lands near
  the one-dimensional maximum along its ray instead of leapfrogging it;
* the accepted step doubles (capped at 1) to seed the next line search;
* convergence when an accepted step improves the objective by less than the
  configured tolerance, or when no step as small as 1e-18 passes the test.

The refinement matters: accepting any increase lets a saturated step
oscillate across the ridge with vanishing gains, which stalls the
gain-based stopping rule while the iterate is still far away in parameter
space.  With near-exact line searches the gain tracks the remaining error,
so the stopping rule is trustworthy.

Because only increases are ever accepted, the per-iteration objective is
monotone by construction.  Multimodality is handled by restarting from
seeded random states and keeping the best run.
"""

from dataclasses import dataclass, replace

import numpy as np

from .circular import LOG_TWO_PI, validate_grid_size
from .errors import ConfigurationError
from .states import StateVector, normalize, random_state

__all__ = [
    "OptimizerConfig",
    "OptimizationResult",
    "SweepPoint",
    "objective_gradient",
    "tangent_project",
    "gauge_fix",
    "optimize_state",
    "bound_sweep",
]

_MASS_FLOOR = 1e-300
_MIN_STEP = 1e-18

# Armijo coefficient: fraction of the first-order gain a step must realize.
_SUFFICIENT = 0.1


@dataclass(frozen=True)
class OptimizerConfig:
    """Search settings for :func:`optimize_state`.

    Parameters
    ----------
    max_photon : int
        Photon cutoff N of the search space.
    grid_size : int
        Quadrature grid for the objective (power of two, >= 64, and large
        enough to hold N + 1 amplitudes).
    starts : int
        Number of random restarts.
    step_init : float
        Initial line-search step.
    convergence_tol : float
        An accepted improvement below this declares the run converged.
    max_iters : int
        Iteration cap per start.
    seed : int
        Seeds the restart states deterministically.
    """

    max_photon: int
    grid_size: int = 4096
    starts: int = 16
    step_init: float = 0.1
    convergence_tol: float = 1e-10
    max_iters: int = 10_000
    seed: int = 0

    def __post_init__(self):
        if not isinstance(self.max_photon, (int, np.integer)) or self.max_photon < 0:
            raise ConfigurationError("max_photon must be a nonnegative integer")
        g = validate_grid_size(self.grid_size)
        if g < self.max_photon + 1:
            raise ConfigurationError(
                "grid size %d cannot hold %d amplitudes" % (g, self.max_photon + 1)
            )
        if self.starts < 1:
            raise ConfigurationError("starts must be at least 1")
        if not self.step_init > 0.0:
            raise ConfigurationError("step_init must be positive")
        if not self.convergence_tol > 0.0:
            raise ConfigurationError("convergence_tol must be positive")
        if self.max_iters < 1:
            raise ConfigurationError("max_iters must be at least 1")


@dataclass(frozen=True)
class OptimizationResult:
    """Best state found, with per-start diagnostics.

    ``information`` is exactly ``max(per_start)``; ``converged`` is the flag
    of the winning start.  The reported state is gauge fixed, so rerunning
    with the same config reproduces it bit for bit.
    """

    state: StateVector
    information: float
    per_start: tuple
    per_start_converged: tuple
    converged: bool
    iterations: int


@dataclass(frozen=True)
class SweepPoint:
    max_photon: int
    information: float
    state: StateVector
    converged: bool


def _density_and_amplitude(c, grid_size):
    padded = np.zeros(grid_size, dtype=np.complex128)
    padded[: c.size] = c
    f = np.fft.ifft(padded) * grid_size
    return np.abs(f) ** 2 / (2.0 * np.pi), f


def _objective_raw(c, grid_size):
    p, _ = _density_and_amplitude(c, grid_size)
    mask = p > _MASS_FLOOR
    terms = np.where(mask, p * np.log(np.where(mask, p, 1.0)), 0.0)
    return LOG_TWO_PI + float(terms.sum()) * (2.0 * np.pi) / grid_size


def _gradient_raw(c, grid_size):
    # d/d(conj c_n) of the gridded objective: (1/G) sum_k (1 + log P_k) f_k e^{-i n phi_k}.
    p, f = _density_and_amplitude(c, grid_size)
    w = np.where(p > _MASS_FLOOR, 1.0 + np.log(np.where(p > _MASS_FLOOR, p, 1.0)), 0.0)
    return np.fft.fft(w * f)[: c.size] / grid_size


def objective_gradient(state, grid_size=4096):
    """Wirtinger gradient of the information objective at a state.

    Returned with respect to the conjugate amplitudes and unprojected; the
    directional derivative of J along a real perturbation u of c is
    2 Re <grad, u> after projecting onto the sphere's tangent space.
    """
    g = validate_grid_size(grid_size)
    if g < state.dim:
        raise ConfigurationError(
            "grid size %d cannot hold %d amplitudes" % (g, state.dim)
        )
    return _gradient_raw(state.amplitudes, g)


def tangent_project(amplitudes, grad):
    """Remove the radial component of a gradient at a unit vector."""
    radial = float(np.real(np.vdot(amplitudes, grad)))
    return grad - radial * amplitudes


def gauge_fix(state):
    """Canonical representative of a state's gauge orbit.

    The linear phase is chosen so the canonical density has mean direction
    zero (the first trigonometric moment of the density becomes real and
    nonnegative), then a global phase makes the leading nonzero amplitude
    real and nonnegative.  Idempotent up to rounding.
    """
    c = state.amplitudes
    z1 = complex(np.sum(c[:-1] * np.conj(c[1:]))) if c.size > 1 else 0.0
    beta = float(np.angle(z1)) if abs(z1) > 1e-12 else 0.0
    c = c * np.exp(1j * beta * np.arange(c.size))
    lead = 0
    mags = np.abs(c)
    if mags[0] <= 1e-12:
        lead = int(np.argmax(mags > 1e-12))
    c = c * np.exp(-1j * np.angle(c[lead]))
    c = c.copy()
    c[lead] = abs(c[lead])
    return normalize(c)


def _ascend(c0, config):
    """Run one projected-gradient start; returns (c, value, iters, converged, history)."""
    g = config.grid_size
    c = np.array(c0, dtype=np.complex128)
    c /= np.linalg.norm(c)
    value = _objective_raw(c, g)
    history = [value]
    step = config.step_init
    for iteration in range(1, config.max_iters + 1):
        direction = tangent_project(c, _gradient_raw(c, g))
        gsq = float(np.real(np.vdot(direction, direction)))
        if gsq == 0.0:
            return c, value, iteration, True, history

        def probe(s):
            trial = c + s * direction
            trial /= np.linalg.norm(trial)
            return _objective_raw(trial, g), trial

        # Directional derivative along the direction is 2 * gsq, so the
        # first-order gain of a step s is 2 * s * gsq.
        s = step
        accepted = False
        while s > _MIN_STEP:
            trial_value, trial = probe(s)
            if trial_value >= value + _SUFFICIENT * 2.0 * s * gsq:
                accepted = True
                break
            s *= 0.5
        if not accepted:
            # No step of any size realizes the first-order gain: stationary.
            return c, value, iteration, True, history
        # Refine: fit a parabola through steps 0, s/2, s and jump to its
        # vertex when that beats both probes.
        half_value, half = probe(s / 2.0)
        concavity = 2.0 * (2.0 * half_value - value - trial_value)
        if concavity > 0.0:
            vertex = (s / 2.0) * (4.0 * half_value - 3.0 * value - trial_value) / concavity
            if 0.0 < vertex < 4.0 * s:
                vertex_value, refined = probe(vertex)
                if vertex_value > trial_value and vertex_value > half_value:
                    trial_value, trial, s = vertex_value, refined, vertex
        if half_value > trial_value:
            trial_value, trial, s = half_value, half, s / 2.0
        gain = trial_value - value
        if gain <= 0.0:
            return c, value, iteration, True, history
        c, value = trial, trial_value
        history.append(value)
        step = min(s * 2.0, 1.0)
        if gain < config.convergence_tol:
            return c, value, iteration, True, history
    return c, value, config.max_iters, False, history


def optimize_state(config):
    """Search for the maximum-information state at the configured cutoff.

    Runs ``config.starts`` independent ascents from seeded random states and
    returns the best.  Deterministic for a fixed config.

    Returns
    -------
    OptimizationResult
        ``converged`` is False when the winning start hit the iteration cap;
        the best state found is still returned.
    """
    if not isinstance(config, OptimizerConfig):
        raise ConfigurationError("expected an OptimizerConfig")
    start_seeds = np.random.SeedSequence(config.seed).generate_state(
        config.starts, dtype=np.uint64
    )
    values = []
    flags = []
    runs = []
    for s in start_seeds:
        c0 = random_state(config.max_photon, int(s)).amplitudes
        c, value, iters, converged, _ = _ascend(c0, config)
        # The objective is a mutual information; tiny negatives are pure
        # quadrature rounding at the N = 0 fixed point.
        values.append(value if value > 0.0 else 0.0)
        flags.append(converged)
        runs.append((c, iters))
    best = int(np.argmax(values))
    best_c, best_iters = runs[best]
    return OptimizationResult(
        state=gauge_fix(normalize(best_c)),
        information=float(values[best]),
        per_start=tuple(float(v) for v in values),
        per_start_converged=tuple(bool(f) for f in flags),
        converged=bool(flags[best]),
        iterations=int(best_iters),
    )


def bound_sweep(n_max, config):
    """Optimal information at every cutoff N = 0 .. n_max.

    Non-convergence at some cutoff is recorded in that point's flag; the
    sweep itself always completes.
    """
    if n_max < 0:
        raise ConfigurationError("n_max must be nonnegative")
    points = []
    for n in range(n_max + 1):
        result = optimize_state(replace(config, max_photon=n))
        points.append(
            SweepPoint(
                max_photon=n,
                information=result.information,
                state=result.state,
                converged=result.converged,
            )
        )
    return points
