"""Modified quadratic Lorenz system.

The vector field is

    dx/dt = sigma * (y * z - x)
    dy/dt = rho * x - x * z
    dz/dt = (x * y) ** 2 - beta * z

with all three parameters positive. The quadratic cross terms make the
divergence constant, -(sigma + beta), so phase-space volume contracts at a
state-independent exponential rate. The field commutes with the reflection
(x, y, z) -> (-x, -y, z).
"""

from dataclasses import dataclass

import numpy as np

from .errors import BlowUpError, ZeroCoordinateError

_COORD_NAMES = ("x", "y", "z")


@dataclass(frozen=True)
class SystemParams:
    """Parameter triple (sigma, rho, beta); every parameter must be positive."""

    sigma: float
    rho: float
    beta: float

    def __post_init__(self):
        for name in ("sigma", "rho", "beta"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0.0:
                raise ValueError(f"{name} must be positive and finite, got {value!r}")


def _as_state(state):
    """Coerce to a float (3,) array; reject wrong shapes."""
    arr = np.asarray(state, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"state must have shape (3,), got {arr.shape}")
    return arr


def _require_finite(state, t=None, context="state"):
    if not np.all(np.isfinite(state)):
        raise BlowUpError(f"non-finite {context}: {np.asarray(state)!r}", t=t, state=state)


def vector_field(state, params):
    """Evaluate the right-hand side at ``state``.

    Parameters
    ----------
    state : array_like, shape (3,)
        Point (x, y, z); all coordinates must be finite.
    params : SystemParams

    Returns
    -------
    numpy.ndarray, shape (3,)

    Raises
    ------
    BlowUpError
        If the input state or any derivative component is non-finite
        (overflow of the quadratic terms).
    """
    s = _as_state(state)
    _require_finite(s)
    x, y, z = float(s[0]), float(s[1]), float(s[2])
    # squares spelled as products: float ** raises OverflowError, * goes to inf
    xy = x * y
    out = np.array(
        [
            params.sigma * (y * z - x),
            params.rho * x - x * z,
            xy * xy - params.beta * z,
        ]
    )
    if not np.all(np.isfinite(out)):
        bad = _COORD_NAMES[int(np.flatnonzero(~np.isfinite(out))[0])]
        raise BlowUpError(f"vector field overflowed in d{bad}/dt at {s!r}", state=s)
    return out


def jacobian(state, params):
    """Jacobian matrix of the vector field at ``state``, shape (3, 3).

    The trace is identically -(sigma + beta) regardless of the state.
    """
    s = _as_state(state)
    _require_finite(s)
    x, y, z = float(s[0]), float(s[1]), float(s[2])
    sig = params.sigma
    return np.array(
        [
            [-sig, sig * z, sig * y],
            [params.rho - z, 0.0, -x],
            [2.0 * x * y * y, 2.0 * x * x * y, -params.beta],
        ]
    )


def divergence(params):
    """State-independent divergence of the field, -(sigma + beta)."""
    return -(params.sigma + params.beta)


def apply_symmetry(state):
    """Apply the reflection (x, y, z) -> (-x, -y, z) that the field commutes with."""
    s = _as_state(state)
    return np.array([-s[0], -s[1], s[2]])


def geometric_exponent(state, params):
    """Componentwise relative growth rate f_i(state) / state_i.

    This is the exponent of the multiplicative (geometric) form of the
    system: writing each coordinate as sign * exp(u), the log-magnitudes
    evolve as du/dt = f(state) / state.

    Raises
    ------
    ZeroCoordinateError
        If any coordinate is zero; the relative rate is undefined there.
    """
    s = _as_state(state)
    zero = np.flatnonzero(s == 0.0)
    if zero.size:
        raise ZeroCoordinateError(
            f"coordinate {_COORD_NAMES[int(zero[0])]} is zero; "
            "relative growth rate is undefined"
        )
    return vector_field(s, params) / s


def bigeometric_exponent(t, state, params):
    """Relative growth rate per unit of log-time, t * f(state) / state.

    This is the exponent of the multiplicative form whose independent
    variable is s = ln(t); requires t > 0.
    """
    if not (t > 0.0) or not np.isfinite(t):
        raise ValueError(f"bigeometric exponent requires t > 0, got {t!r}")
    return t * geometric_exponent(state, params)
