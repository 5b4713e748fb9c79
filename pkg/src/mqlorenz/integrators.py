"""Fixed-step fourth-order Runge-Kutta integration.

Three flavours share one stepping discipline:

* classical RK4 on the flow itself (``rk4_step`` / ``integrate``), plus the
  coupled variational system for tangent frames (``variational_rk4_step``);
* geometric multiplicative RK4 (``geometric_rk4_step``): classical RK4 applied
  to the log-magnitudes u = ln|coordinate| with the coordinate signs frozen,
  so each update is coordinate_{n+1} = coordinate_n * exp(h/6 * (e1 + 2 e2 +
  2 e3 + e4)) with stage exponents e_i;
* bigeometric multiplicative RK4 (``bigeometric_rk4_step``): the same idea
  with log-scaled time, stepping u against s = ln t, so steps are uniform in
  log-time.

Everything is pure and deterministic: the same inputs give bit-identical
outputs. Runs abort with a typed blow-up error (carrying the last finite
state) when a coordinate exceeds the magnitude limit or stops being finite.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import BlowUpError, ZeroCoordinateError
from .model import SystemParams, _as_state, _require_finite

# any coordinate magnitude beyond this aborts a run; keeps outputs plottable
BLOWUP_LIMIT = 1e12


@dataclass(frozen=True)
class SimSettings:
    """Settings for a fixed-step run.

    ``h`` is the step in time units for classical and geometric runs, and the
    step in s = ln(t) for bigeometric runs (whose samples are therefore
    uniformly spaced in log-time). ``discard`` omits early samples by real
    time t < t0 + discard; ``sample_every`` decimates the sampled steps.
    """

    t0: float = 0.0
    t_end: float = 1000.0
    h: float = 1e-3
    discard: float = 100.0
    sample_every: int = 1

    def __post_init__(self):
        if not np.isfinite(self.h) or self.h <= 0.0:
            raise ValueError(f"h must be positive and finite, got {self.h!r}")
        if not (np.isfinite(self.t0) and np.isfinite(self.t_end) and self.t_end > self.t0):
            raise ValueError(f"need t_end > t0, got t0={self.t0!r}, t_end={self.t_end!r}")
        if not (0.0 <= self.discard < self.t_end - self.t0):
            raise ValueError(
                f"discard must lie in [0, t_end - t0), got {self.discard!r}"
            )
        if not isinstance(self.sample_every, int) or self.sample_every < 1:
            raise ValueError(f"sample_every must be a positive integer, got {self.sample_every!r}")
        if (self.t_end - self.t0) / self.h > 2**62:
            raise ValueError("step count does not fit in a machine integer")


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Sampled run: times (n,) and states (n, 3), with the inputs that made it.

    ``kind`` is "classical", "geometric", or "bigeometric". Classical and
    geometric sample times are uniformly spaced by h * sample_every;
    bigeometric sample times are uniform in ln(t).
    """

    params: SystemParams
    settings: SimSettings
    kind: str
    times: np.ndarray
    states: np.ndarray

    def __len__(self):
        return self.times.shape[0]


class MulKind(enum.Enum):
    """Which multiplicative integrator to run."""

    GEOMETRIC = "geometric"
    BIGEOMETRIC = "bigeometric"


def _rk4_scalar(sig, rho, bet, x, y, z, h):
    """One RK4 step on unpacked scalars; the single source of step arithmetic.

    Squares are spelled as products throughout: Python's float ** raises
    OverflowError where * silently overflows to inf, and the inf is what the
    finiteness checks downstream are built to catch.
    """
    xy = x * y
    k1x = sig * (y * z - x)
    k1y = rho * x - x * z
    k1z = xy * xy - bet * z
    x2 = x + 0.5 * h * k1x
    y2 = y + 0.5 * h * k1y
    z2 = z + 0.5 * h * k1z
    xy2 = x2 * y2
    k2x = sig * (y2 * z2 - x2)
    k2y = rho * x2 - x2 * z2
    k2z = xy2 * xy2 - bet * z2
    x3 = x + 0.5 * h * k2x
    y3 = y + 0.5 * h * k2y
    z3 = z + 0.5 * h * k2z
    xy3 = x3 * y3
    k3x = sig * (y3 * z3 - x3)
    k3y = rho * x3 - x3 * z3
    k3z = xy3 * xy3 - bet * z3
    x4 = x + h * k3x
    y4 = y + h * k3y
    z4 = z + h * k3z
    xy4 = x4 * y4
    k4x = sig * (y4 * z4 - x4)
    k4y = rho * x4 - x4 * z4
    k4z = xy4 * xy4 - bet * z4
    return (
        x + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
        y + (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
        z + (h / 6.0) * (k1z + 2.0 * k2z + 2.0 * k3z + k4z),
    )


def _check_h(h):
    if not math.isfinite(h) or h <= 0.0:
        raise ValueError(f"step h must be positive and finite, got {h!r}")


def rk4_step(p, s, h):
    """One classical RK4 step of length ``h`` from state ``s``.

    Raises a blow-up error if the result is non-finite (a non-finite stage
    always poisons the result, so checking the result suffices).
    """
    _check_h(h)
    arr = _as_state(s)
    _require_finite(arr)
    x, y, z = _rk4_scalar(p.sigma, p.rho, p.beta, float(arr[0]), float(arr[1]), float(arr[2]), h)
    if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
        raise BlowUpError(f"RK4 step from {arr!r} produced a non-finite state", state=arr)
    return np.array([x, y, z])


def _step_count(span, h):
    n = int(round(span / h))
    if n < 1:
        raise ValueError(f"span {span!r} shorter than one step h={h!r}")
    return n


def _sample_floor(cfg):
    # tiny slack so t0 + k*h rounding cannot drop the first kept sample
    cutoff = cfg.t0 + cfg.discard
    return cutoff - 1e-12 * max(1.0, abs(cutoff))


def integrate(p, init, cfg):
    """Run classical RK4 from ``init`` over [cfg.t0, cfg.t_end].

    Samples every ``sample_every``-th step (the initial state included when
    discard is zero), omitting samples earlier than t0 + discard. Aborts with
    a blow-up error when a coordinate leaves [-1e12, 1e12] or stops being
    finite; the error carries the last finite state and its time.
    """
    arr = _as_state(init)
    _require_finite(arr)
    sig, rho, bet = p.sigma, p.rho, p.beta
    h = cfg.h
    n = _step_count(cfg.t_end - cfg.t0, h)
    floor = _sample_floor(cfg)
    x, y, z = float(arr[0]), float(arr[1]), float(arr[2])
    times = []
    states = []
    if cfg.t0 >= floor:
        times.append(cfg.t0)
        states.append((x, y, z))
    for k in range(1, n + 1):
        xp, yp, zp = x, y, z
        x, y, z = _rk4_scalar(sig, rho, bet, x, y, z, h)
        t = cfg.t0 + k * h
        if not (abs(x) <= BLOWUP_LIMIT and abs(y) <= BLOWUP_LIMIT and abs(z) <= BLOWUP_LIMIT):
            raise BlowUpError(
                f"trajectory blew up at t={t!r} (step {k})",
                t=t,
                state=np.array([xp, yp, zp]),
            )
        if k % cfg.sample_every == 0 and t >= floor:
            times.append(t)
            states.append((x, y, z))
    return Trajectory(
        params=p,
        settings=cfg,
        kind="classical",
        times=np.array(times, dtype=float),
        states=np.array(states, dtype=float).reshape(len(states), 3),
    )


def _jac_scalar(sig, rho, bet, x, y, z):
    return np.array(
        [
            [-sig, sig * z, sig * y],
            [rho - z, 0.0, -x],
            [2.0 * x * y * y, 2.0 * x * x * y, -bet],
        ]
    )


def _var_rk4_scalar(sig, rho, bet, x, y, z, frame, h):
    """One RK4 step of the coupled (state, tangent frame) system.

    The state arithmetic matches _rk4_scalar expression for expression, so a
    variational run visits bit-identical states to a plain run.
    """
    xy = x * y
    k1x = sig * (y * z - x)
    k1y = rho * x - x * z
    k1z = xy * xy - bet * z
    g1 = _jac_scalar(sig, rho, bet, x, y, z) @ frame
    x2 = x + 0.5 * h * k1x
    y2 = y + 0.5 * h * k1y
    z2 = z + 0.5 * h * k1z
    f2 = frame + (0.5 * h) * g1
    xy2 = x2 * y2
    k2x = sig * (y2 * z2 - x2)
    k2y = rho * x2 - x2 * z2
    k2z = xy2 * xy2 - bet * z2
    g2 = _jac_scalar(sig, rho, bet, x2, y2, z2) @ f2
    x3 = x + 0.5 * h * k2x
    y3 = y + 0.5 * h * k2y
    z3 = z + 0.5 * h * k2z
    f3 = frame + (0.5 * h) * g2
    xy3 = x3 * y3
    k3x = sig * (y3 * z3 - x3)
    k3y = rho * x3 - x3 * z3
    k3z = xy3 * xy3 - bet * z3
    g3 = _jac_scalar(sig, rho, bet, x3, y3, z3) @ f3
    x4 = x + h * k3x
    y4 = y + h * k3y
    z4 = z + h * k3z
    f4 = frame + h * g3
    xy4 = x4 * y4
    k4x = sig * (y4 * z4 - x4)
    k4y = rho * x4 - x4 * z4
    k4z = xy4 * xy4 - bet * z4
    g4 = _jac_scalar(sig, rho, bet, x4, y4, z4) @ f4
    return (
        x + (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
        y + (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y),
        z + (h / 6.0) * (k1z + 2.0 * k2z + 2.0 * k3z + k4z),
        frame + (h / 6.0) * (g1 + 2.0 * g2 + 2.0 * g3 + g4),
    )


def variational_rk4_step(p, s, f, h):
    """One RK4 step of the state together with a 3x3 tangent frame.

    Tangent stages use the Jacobian evaluated at the matching state stages,
    which is the classical RK4 discretization of the variational system.

    Returns
    -------
    (state, frame)
    """
    _check_h(h)
    arr = _as_state(s)
    _require_finite(arr)
    frame = np.asarray(f, dtype=float)
    if frame.shape != (3, 3):
        raise ValueError(f"tangent frame must have shape (3, 3), got {frame.shape}")
    _require_finite(frame, context="tangent frame")
    x, y, z, frame_out = _var_rk4_scalar(
        p.sigma, p.rho, p.beta, float(arr[0]), float(arr[1]), float(arr[2]), frame, h
    )
    out = np.array([x, y, z])
    if not np.all(np.isfinite(out)) or not np.all(np.isfinite(frame_out)):
        raise BlowUpError(f"variational step from {arr!r} produced a non-finite result", state=arr)
    return out, frame_out


def _split_signs_logs(arr):
    """Decompose a nonzero state into (signs, log-magnitudes)."""
    flat = [float(v) for v in arr]
    for name, v in zip("xyz", flat):
        if v == 0.0:
            raise ZeroCoordinateError(
                f"coordinate {name} is zero; multiplicative form needs nonzero coordinates"
            )
    signs = tuple(1.0 if v > 0.0 else -1.0 for v in flat)
    logs = np.array([math.log(abs(v)) for v in flat])
    return signs, logs


def _rk4_nonauto(fn, tvar, u, h):
    """One classical RK4 step of du/dtvar = fn(tvar, u) for array state."""
    k1 = fn(tvar, u)
    k2 = fn(tvar + 0.5 * h, u + (0.5 * h) * k1)
    k3 = fn(tvar + 0.5 * h, u + (0.5 * h) * k2)
    k4 = fn(tvar + h, u + h * k3)
    return u + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _geo_exponent_fn(p, signs):
    """Relative growth rates as a function of log-magnitudes, signs frozen."""
    sig, rho, bet = p.sigma, p.rho, p.beta
    sx, sy, sz = signs

    def fn(_tvar, u):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            x = sx * np.exp(u[0])
            y = sy * np.exp(u[1])
            z = sz * np.exp(u[2])
            xy = x * y
            return np.array(
                [
                    sig * (y * z - x) / x,
                    (rho * x - x * z) / y,
                    (xy * xy - bet * z) / z,
                ]
            )

    return fn


def _bigeo_exponent_fn(p, signs):
    """Growth rates per unit log-time: e^s times the geometric exponent."""
    geo = _geo_exponent_fn(p, signs)

    def fn(slog, u):
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            return np.exp(slog) * geo(slog, u)

    return fn


def _recompose(signs, u, t, context):
    with np.errstate(over="ignore"):
        state = np.array(signs) * np.exp(u)
    if not np.all(np.isfinite(state)) or np.any(np.abs(state) > BLOWUP_LIMIT):
        raise BlowUpError(
            f"multiplicative {context} left the bounded domain at t={t!r}",
            t=t,
            state=state,
        )
    return state


def geometric_rk4_step(p, s, h):
    """One geometric multiplicative RK4 step of length ``h``.

    Exact log conjugate of classical RK4: advances u = ln|coordinate| with
    the signs of ``s`` frozen, then maps back. Coordinates never change sign;
    a trajectory heading for a sign change diverges in u instead and raises
    a blow-up error.
    """
    _check_h(h)
    arr = _as_state(s)
    _require_finite(arr)
    signs, u = _split_signs_logs(arr)
    u_next = _rk4_nonauto(_geo_exponent_fn(p, signs), 0.0, u, h)
    if not np.all(np.isfinite(u_next)):
        raise BlowUpError(f"geometric step from {arr!r} diverged in log-space", state=arr)
    return _recompose(signs, u_next, None, "step")


def bigeometric_rk4_step(p, t, s, h_s):
    """One bigeometric multiplicative RK4 step; ``h_s`` is a step in ln(t).

    Advances u = ln|coordinate| against s = ln(t) with frozen signs and
    returns (t_next, state) where t_next = exp(ln(t) + h_s). Requires t > 0.
    """
    _check_h(h_s)
    t = float(t)
    if not (math.isfinite(t) and t > 0.0):
        raise ValueError(f"bigeometric step requires t > 0, got {t!r}")
    arr = _as_state(s)
    _require_finite(arr)
    signs, u = _split_signs_logs(arr)
    slog = math.log(t)
    u_next = _rk4_nonauto(_bigeo_exponent_fn(p, signs), slog, u, h_s)
    t_next = math.exp(slog + h_s)
    if not np.all(np.isfinite(u_next)):
        raise BlowUpError(
            f"bigeometric step from {arr!r} diverged in log-space", t=t, state=arr
        )
    return t_next, _recompose(signs, u_next, t_next, "step")


def integrate_multiplicative(kind, p, init, cfg):
    """Run a multiplicative integrator with the same sampling rules as integrate.

    The log-state is carried across steps and recomposed only at sample
    times, so a geometric run is the classical integration of the
    log-transformed system, mapped back through exp.

    Geometric runs step uniformly in t; bigeometric runs step uniformly in
    s = ln(t) (cfg.h is a log-time step) and require cfg.t0 > 0. ``discard``
    always compares real time.
    """
    if not isinstance(kind, MulKind):
        raise ValueError(f"kind must be a MulKind, got {kind!r}")
    arr = _as_state(init)
    _require_finite(arr)
    signs, u = _split_signs_logs(arr)
    floor = _sample_floor(cfg)
    times = []
    states = []

    if kind is MulKind.GEOMETRIC:
        fn = _geo_exponent_fn(p, signs)
        n = _step_count(cfg.t_end - cfg.t0, cfg.h)
        base = cfg.t0
        grid = [cfg.t0 + k * cfg.h for k in range(n + 1)]
    else:
        if not cfg.t0 > 0.0:
            raise ValueError("bigeometric runs need cfg.t0 > 0 (log-time variable)")
        fn = _bigeo_exponent_fn(p, signs)
        slog0 = math.log(cfg.t0)
        n = _step_count(math.log(cfg.t_end) - slog0, cfg.h)
        base = slog0
        grid = [math.exp(slog0 + k * cfg.h) for k in range(n + 1)]

    if cfg.t0 >= floor:
        times.append(grid[0])
        states.append(_recompose(signs, u, grid[0], "run"))
    for k in range(1, n + 1):
        u_prev = u
        u = _rk4_nonauto(fn, base + (k - 1) * cfg.h, u, cfg.h)
        t = grid[k]
        if not np.all(np.isfinite(u)):
            raise BlowUpError(
                f"multiplicative run diverged in log-space at t={t!r} (step {k})",
                t=t,
                state=np.array(signs) * np.exp(u_prev),
            )
        if k % cfg.sample_every == 0 and t >= floor:
            times.append(t)
            states.append(_recompose(signs, u, t, "run"))
    return Trajectory(
        params=p,
        settings=cfg,
        kind=kind.value,
        times=np.array(times, dtype=float),
        states=np.array(states, dtype=float).reshape(len(states), 3),
    )
