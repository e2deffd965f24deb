import numpy as np
import pytest

import phaseinfo as pi


@pytest.fixture
def n1_state():
    """The two-level benchmark state with equal amplitudes."""
    return pi.normalize([1.0, 1.0])


@pytest.fixture
def write_state(tmp_path):
    """Factory writing a state to a JSON file, returning the path string."""

    def _write(state, name="state.json"):
        path = tmp_path / name
        pi.save_state(state, str(path))
        return str(path)

    return _write


def independent_density(state, grid_size):
    """Reference canonical density evaluated without the FFT path."""
    phis = 2.0 * np.pi * np.arange(grid_size) / grid_size
    n = np.arange(state.dim)
    f = np.exp(1j * np.outer(phis, n)) @ state.amplitudes
    return np.abs(f) ** 2 / (2.0 * np.pi)


def independent_entropy(values):
    """Reference midpoint-rule entropy with extended-precision accumulation."""
    p = np.asarray(values, dtype=np.longdouble)
    mask = p > 0
    acc = -np.sum(p[mask] * np.log(p[mask])) * (2.0 * np.longdouble(np.pi)) / p.size
    return float(acc)
