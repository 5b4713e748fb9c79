import time

import numpy as np
import pytest

from mqlorenz import BenettinSettings, SystemParams, lyapunov_spectrum

DEFAULT_PARAMS = SystemParams(12.0, 8.0, 4.0)
DEFAULT_INIT = (1.0, 1.0, 1.0)


@pytest.fixture(scope="session")
def params():
    return DEFAULT_PARAMS


@pytest.fixture(scope="session")
def pinned_run():
    """The default-settings spectrum and its wall time, computed once.

    Shared by the acceptance gate and the invariance tests; the run is the
    expensive part of the suite (about 20 s).
    """
    t0 = time.perf_counter()
    spec = lyapunov_spectrum(DEFAULT_PARAMS, DEFAULT_INIT, BenettinSettings())
    return spec, time.perf_counter() - t0


def max_lag_correlation(xs, min_lag, max_lag):
    """Largest |autocorrelation| of a series over a lag range (in samples)."""
    xs = np.asarray(xs, dtype=float)
    xs = xs - np.mean(xs)
    denom = float(np.dot(xs, xs))
    best = 0.0
    for lag in range(min_lag, max_lag + 1):
        c = abs(float(np.dot(xs[:-lag], xs[lag:])) / denom)
        best = max(best, c)
    return best
