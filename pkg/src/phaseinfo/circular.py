"""Probability densities on the circle and their information functionals.

Densities are sampled on the uniform grid phi_k = 2 pi k / G.  All integrals
use the periodic midpoint rule (2 pi / G times the node sum), which is exact
for trigonometric polynomials of degree below G and spectrally accurate for
smooth periodic integrands, so no fancier quadrature is ever needed here.

Conventions used throughout:

* entropy integrand treats 0 * log 0 as 0, and any node mass below 1e-300
  as exactly zero;
* differential entropy is in nats; the uniform density has entropy log(2 pi);
* mutual information of a single measurement is log(2 pi) minus the entropy
  of the canonical measurement density.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DegeneratePosteriorError
from .states import TWO_PI, phase_amplitude, phase_amplitude_grid

__all__ = [
    "LOG_TWO_PI",
    "grid_angles",
    "validate_grid_size",
    "CircularDensity",
    "uniform_prior",
    "canonical_density",
    "posterior_update",
    "posterior_from_outcomes",
    "entropy",
    "mutual_information_single",
    "fisher_information",
    "CircularMoments",
    "circular_moments",
    "InformationReport",
    "information_report",
]

LOG_TWO_PI = float(np.log(TWO_PI))

# Node masses below this are treated as exact zeros inside logarithms.
_MASS_FLOOR = 1e-300

# Density values below this switch the Fisher integrand to its limit form.
_FISHER_FLOOR = 1e-14


def grid_angles(grid_size):
    """The uniform angle grid phi_k = 2 pi k / G, k = 0 .. G-1."""
    return TWO_PI * np.arange(grid_size) / grid_size


def validate_grid_size(grid_size):
    """Check that a grid size is a power of two and at least 64.

    Powers of two keep the FFT evaluation path exact and fast; the floor of
    64 keeps quadrature honest for every state within the supported photon
    cutoffs.  Returns the validated size as int.
    """
    g = grid_size
    if not isinstance(g, (int, np.integer)) or isinstance(g, bool):
        raise ConfigurationError("grid size must be an integer, got %r" % (grid_size,))
    g = int(g)
    if g < 64 or (g & (g - 1)) != 0:
        raise ConfigurationError(
            "grid size must be a power of two >= 64, got %d" % g
        )
    return g


@dataclass(frozen=True)
class CircularDensity:
    """Nonnegative density on the uniform circular grid, integrating to 1.

    Parameters
    ----------
    values : ndarray
        Density values at the grid nodes.
    log_values : ndarray, optional
        Log-density at the same nodes (entries may be -inf where the density
        vanishes).  Carried so that long Bayesian update chains can run in
        log space without underflow.

    Raises
    ------
    ValueError
        If values are negative, non-finite, or the midpoint-rule integral
        differs from 1 by more than 1e-9.
    """

    values: np.ndarray
    log_values: np.ndarray | None = None

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("density values must form a non-empty 1-d array")
        if not np.all(np.isfinite(vals)):
            raise ValueError("density values must be finite")
        if np.any(vals < 0.0):
            raise ValueError("density values must be nonnegative")
        total = float(vals.sum()) * TWO_PI / vals.size
        if abs(total - 1.0) > 1e-9:
            raise ValueError(
                "density integrates to %.17g, expected 1 within 1e-9" % total
            )
        vals = vals.copy()
        vals.flags.writeable = False
        object.__setattr__(self, "values", vals)
        if self.log_values is not None:
            logs = np.asarray(self.log_values, dtype=np.float64)
            if logs.shape != vals.shape:
                raise ValueError("log_values shape must match values")
            if np.any(np.isnan(logs)) or np.any(logs == np.inf):
                raise ValueError("log_values must be free of NaN and +inf")
            logs = logs.copy()
            logs.flags.writeable = False
            object.__setattr__(self, "log_values", logs)

    @property
    def grid_size(self):
        return self.values.size


def uniform_prior(grid_size):
    """The flat density 1 / (2 pi), with log values attached."""
    g = validate_grid_size(grid_size)
    vals = np.full(g, 1.0 / TWO_PI)
    logs = np.full(g, -LOG_TWO_PI)
    return CircularDensity(vals, logs)


def canonical_density(state, grid_size):
    """Canonical measurement density of a state on the uniform grid.

    P(phi) = |sum_n c_n exp(i n phi)|^2 / (2 pi), evaluated by FFT.  The
    modulus square cannot go negative, but a maximum with zero is applied so
    downstream code may rely on it unconditionally.
    """
    g = validate_grid_size(grid_size)
    amp = phase_amplitude_grid(state, g)
    vals = np.maximum(np.abs(amp) ** 2 / TWO_PI, 0.0)
    return CircularDensity(vals)


def _log_likelihood_at(state, outcome, angles):
    """log P(outcome - theta) over a grid of candidate phases theta."""
    amp = phase_amplitude(state, np.mod(outcome - angles, TWO_PI))
    like = np.abs(amp) ** 2 / TWO_PI
    with np.errstate(divide="ignore"):
        return like, np.log(like)


def posterior_update(prior, state, outcome):
    """One Bayesian update of a phase density by a canonical outcome.

    The likelihood of outcome x given phase theta is the canonical density
    of ``state`` evaluated at x - theta.  When the prior carries log values
    the update runs in log space (stable over long outcome chains);
    otherwise it multiplies densities directly.

    Raises
    ------
    DegeneratePosteriorError
        If the updated density has zero mass at every node.  The message
        names the outcome that caused it.
    """
    angles = grid_angles(prior.grid_size)
    outcome = float(outcome)
    like, loglike = _log_likelihood_at(state, outcome, angles)
    if prior.log_values is not None:
        logs = prior.log_values + loglike
        peak = float(np.max(logs))
        if not np.isfinite(peak):
            raise DegeneratePosteriorError(
                "posterior mass vanished at every grid node after outcome "
                "%.17g" % outcome
            )
        w = np.exp(logs - peak)
        total = float(w.sum()) * TWO_PI / w.size
        vals = w / total
        logs = logs - peak - np.log(total)
        return CircularDensity(vals, logs)
    v = prior.values * like
    total = float(v.sum()) * TWO_PI / v.size
    if total <= 0.0:
        raise DegeneratePosteriorError(
            "posterior mass vanished at every grid node after outcome %.17g"
            % outcome
        )
    return CircularDensity(v / total)


def posterior_from_outcomes(state, outcomes, grid_size):
    """Posterior after a whole outcome sequence, from a uniform prior.

    Accumulates log-likelihoods and normalizes once, so hundreds of sharp
    updates cannot underflow.
    """
    g = validate_grid_size(grid_size)
    angles = grid_angles(g)
    logs = np.full(g, -LOG_TWO_PI)
    for j, outcome in enumerate(np.atleast_1d(np.asarray(outcomes, dtype=np.float64))):
        _, loglike = _log_likelihood_at(state, float(outcome), angles)
        logs = logs + loglike
        if not np.isfinite(np.max(logs)):
            raise DegeneratePosteriorError(
                "posterior mass vanished at every grid node after outcome "
                "index %d (value %.17g)" % (j, float(outcome))
            )
    peak = float(np.max(logs))
    w = np.exp(logs - peak)
    total = float(w.sum()) * TWO_PI / g
    return CircularDensity(w / total, logs - peak - np.log(total))


def entropy(density):
    """Differential entropy in nats, by the periodic midpoint rule.

    Integrand convention: nodes with mass below 1e-300 contribute zero, the
    continuous-limit value of p log p.
    """
    p = density.values
    mask = p > _MASS_FLOOR
    terms = np.where(mask, p * np.log(np.where(mask, p, 1.0)), 0.0)
    return -float(terms.sum()) * TWO_PI / p.size


def mutual_information_single(state, grid_size=4096):
    """Information (nats) one canonical measurement carries about a uniform phase.

    Covariance of the measurement makes this log(2 pi) minus the entropy of
    the state's canonical density; no average over true phases is needed.
    Clamped at zero against rounding, since the uniform prior is the entropy
    maximizer.
    """
    value = LOG_TWO_PI - entropy(canonical_density(state, grid_size))
    return value if value > 0.0 else 0.0


def fisher_information(state, grid_size=4096):
    """Fisher information of the canonical measurement about the phase shift.

    F = integral of P'(phi)^2 / P(phi).  At isolated zeros of P the integrand
    extends continuously to 4 |f'(phi)|^2 / (2 pi) with f the phase amplitude;
    nodes where P falls below 1e-14 use that limit form, which keeps the
    quadrature spectrally accurate through the zeros.
    """
    g = validate_grid_size(grid_size)
    if g < state.dim:
        raise ConfigurationError(
            "grid of %d nodes cannot resolve %d amplitudes" % (g, state.dim)
        )
    fvals = phase_amplitude_grid(state, g)
    n = np.arange(state.dim)
    deriv = np.zeros(g, dtype=np.complex128)
    deriv[: state.dim] = 1j * n * state.amplitudes
    fprime = np.fft.ifft(deriv) * g
    p = np.abs(fvals) ** 2 / TWO_PI
    pprime = 2.0 * np.real(np.conj(fvals) * fprime) / TWO_PI
    limit_form = 4.0 * np.abs(fprime) ** 2 / TWO_PI
    safe = np.where(p > _FISHER_FLOOR, p, 1.0)
    integrand = np.where(p > _FISHER_FLOOR, pprime**2 / safe, limit_form)
    value = float(integrand.sum()) * TWO_PI / g
    return value if value > 0.0 else 0.0


@dataclass(frozen=True)
class CircularMoments:
    """First trigonometric moment summaries of a circular density."""

    mean_resultant_length: float
    mean_direction: float
    circular_variance: float
    holevo_variance: float


def circular_moments(density):
    """Mean resultant length, mean direction, and the derived variances.

    The Holevo phase variance 1/R^2 - 1 diverges as the density flattens;
    below R = 1e-12 it is reported as +inf, which pairs with the zero
    information of such densities instead of poisoning downstream arithmetic.
    """
    p = density.values
    g = p.size
    z1 = complex(np.sum(p * np.exp(1j * grid_angles(g)))) * TWO_PI / g
    r = min(abs(z1), 1.0)
    direction = float(np.mod(np.angle(z1), TWO_PI)) if r > 0.0 else 0.0
    if direction >= TWO_PI:
        # mod of a tiny negative angle can round up to exactly 2 pi
        direction = 0.0
    if r < 1e-12:
        holevo = np.inf
    else:
        holevo = max(1.0 / r**2 - 1.0, 0.0)
    return CircularMoments(
        mean_resultant_length=r,
        mean_direction=direction,
        circular_variance=1.0 - r,
        holevo_variance=float(holevo),
    )


@dataclass(frozen=True)
class InformationReport:
    """Information summary of one state's canonical measurement.

    All entries are in nats (or dimensionless for the moment-derived
    fields).  ``holevo_variance`` may be +inf; everything else is finite.
    """

    entropy: float
    mutual_information: float
    fisher_information: float
    mean_resultant_length: float
    circular_variance: float
    holevo_variance: float

    def to_dict(self):
        return {
            "entropy": self.entropy,
            "mutual_information": self.mutual_information,
            "fisher_information": self.fisher_information,
            "mean_resultant_length": self.mean_resultant_length,
            "circular_variance": self.circular_variance,
            "holevo_variance": self.holevo_variance,
        }


def information_report(state, grid_size=4096):
    """Evaluate every single-measurement functional on one shared density."""
    density = canonical_density(state, grid_size)
    h = entropy(density)
    info = LOG_TWO_PI - h
    moments = circular_moments(density)
    return InformationReport(
        entropy=h,
        mutual_information=info if info > 0.0 else 0.0,
        fisher_information=fisher_information(state, grid_size),
        mean_resultant_length=moments.mean_resultant_length,
        circular_variance=moments.circular_variance,
        holevo_variance=moments.holevo_variance,
    )
