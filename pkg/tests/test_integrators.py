import math

import numpy as np
import pytest

from mqlorenz import (
    BlowUpError,
    MulKind,
    SimSettings,
    ZeroCoordinateError,
    apply_symmetry,
    bigeometric_rk4_step,
    geometric_rk4_step,
    integrate,
    integrate_multiplicative,
    rk4_step,
    variational_rk4_step,
)
from mqlorenz.integrators import _rk4_nonauto
from mqlorenz.model import geometric_exponent

INIT = np.array([1.0, 1.0, 1.0])


def test_settings_validation():
    with pytest.raises(ValueError):
        SimSettings(h=0.0)
    with pytest.raises(ValueError):
        SimSettings(h=-1e-3)
    with pytest.raises(ValueError):
        SimSettings(t0=1.0, t_end=1.0)
    with pytest.raises(ValueError):
        SimSettings(t_end=1.0, discard=1.0)
    with pytest.raises(ValueError):
        SimSettings(sample_every=0)


def test_rk4_step_against_halved_step_reference(params):
    # reference: Richardson extrapolation of two half steps against one full
    # step, accurate to ~4e-13 here; frozen from an independent computation
    ref = np.array([1.0000238788262803, 1.0070015514681647, 0.9970130161223156])
    out = rk4_step(params, INIT, 1e-3)
    assert np.max(np.abs(out - ref)) < 5e-12


def test_integrate_constant_at_rest_point(params):
    traj = integrate(params, (0.0, 0.0, 0.0), SimSettings(t_end=0.002, h=1e-3, discard=0.0))
    assert traj.kind == "classical"
    assert len(traj) == 3
    assert np.array_equal(traj.states, np.zeros((3, 3)))
    assert np.allclose(traj.times, [0.0, 0.001, 0.002])


def test_integrate_sampling_rules(params):
    cfg = SimSettings(t_end=0.01, h=1e-3, discard=0.005)
    traj = integrate(params, INIT, cfg)
    assert len(traj) == 6  # t = 0.005 .. 0.01
    assert traj.times[0] == pytest.approx(0.005)

    cfg = SimSettings(t_end=0.01, h=1e-3, discard=0.0, sample_every=5)
    traj = integrate(params, INIT, cfg)
    assert np.allclose(traj.times, [0.0, 0.005, 0.01])

    cfg = SimSettings(t0=2.0, t_end=2.01, h=1e-3, discard=0.0)
    traj = integrate(params, INIT, cfg)
    assert traj.times[0] == 2.0
    assert len(traj) == 11


def test_integrate_matches_stepwise_bitwise(params):
    cfg = SimSettings(t_end=0.2, h=1e-3, discard=0.0)
    traj = integrate(params, INIT, cfg)
    s = INIT.copy()
    for _ in range(200):
        s = rk4_step(params, s, 1e-3)
    assert np.array_equal(traj.states[-1], s)


def test_blow_up_carries_last_finite_state(params):
    with pytest.raises(BlowUpError) as err:
        integrate(params, (1e6, 1e6, 1e6), SimSettings(t_end=1.0, h=1e-3, discard=0.0))
    assert err.value.t is not None
    assert err.value.state is not None
    assert np.all(np.isfinite(err.value.state))


def test_huge_state_raises_typed_error_not_overflow(params):
    # float ** used to raise OverflowError here instead of overflowing to inf
    with pytest.raises(BlowUpError):
        rk4_step(params, (1e160, 1e160, 1.0), 1e-3)


def test_variational_frame_is_map_derivative(params):
    s = np.array([1.2, -0.8, 2.5])
    h = 1e-3
    _, frame = variational_rk4_step(params, s, np.eye(3), h)
    eps = 1e-6
    for j in range(3):
        dv = np.zeros(3)
        dv[j] = eps
        col = (rk4_step(params, s + dv, h) - rk4_step(params, s - dv, h)) / (2 * eps)
        assert np.max(np.abs(frame[:, j] - col)) < 1e-5


def test_variational_determinant_tracks_divergence(params):
    # det of the tangent frame contracts like exp(divergence * t)
    s = INIT.copy()
    frame = np.eye(3)
    h = 1e-3
    for _ in range(100):
        s, frame = variational_rk4_step(params, s, frame, h)
    det = float(np.linalg.det(frame))
    assert det == pytest.approx(math.exp(-16.0 * 0.1), rel=1e-6)


def test_variational_states_match_plain_run_bitwise(params):
    s_plain = INIT.copy()
    s_var = INIT.copy()
    frame = np.eye(3)
    for _ in range(500):
        s_plain = rk4_step(params, s_plain, 1e-3)
        s_var, frame = variational_rk4_step(params, s_var, frame, 1e-3)
    assert np.array_equal(s_plain, s_var)


def test_step_commutes_with_reflection_exactly(params):
    # sign flips propagate exactly through every RK4 stage
    a = INIT.copy()
    b = apply_symmetry(INIT)
    for _ in range(1000):
        a = rk4_step(params, a, 1e-3)
        b = rk4_step(params, b, 1e-3)
        assert np.array_equal(apply_symmetry(a), b)


def _endpoint(params, h, t_end):
    s = INIT.copy()
    for _ in range(int(round(t_end / h))):
        s = rk4_step(params, s, h)
    return s


def _error_ratios(params, hs, h_ref, t_end):
    ref = _endpoint(params, h_ref, t_end)
    errs = [float(np.max(np.abs(_endpoint(params, h, t_end) - ref))) for h in hs]
    return errs, [errs[i] / errs[i + 1] for i in range(len(errs) - 1)]


def test_fourth_order_convergence_short_horizon(params):
    # halving h cuts the endpoint error ~16x while h resolves the dynamics
    errs, ratios = _error_ratios(params, [1e-2, 5e-3, 2.5e-3], 6.25e-4, 0.2)
    assert all(12.0 < r < 20.0 for r in ratios), (errs, ratios)


def test_fourth_order_convergence_resolved_steps(params):
    errs, ratios = _error_ratios(params, [2.5e-4, 1.25e-4, 6.25e-5], 1.5625e-5, 1.0)
    assert all(14.0 < r < 21.0 for r in ratios), (errs, ratios)


def test_geometric_step_is_log_space_rk4(params):
    # one step recomputed by hand in log space
    s = np.array([0.5, 2.0, 1.5])
    h = 1e-3
    u = np.log(s)

    def fn(_t, ulog):
        return geometric_exponent(np.exp(ulog), params)

    expected = np.exp(_rk4_nonauto(fn, 0.0, u, h))
    out = geometric_rk4_step(params, s, h)
    assert np.max(np.abs(out - expected)) < 1e-14


def test_geometric_step_commutes_with_reflection(params):
    s = np.array([0.7, 1.1, 2.0])
    a = geometric_rk4_step(params, apply_symmetry(s), 1e-3)
    b = apply_symmetry(geometric_rk4_step(params, s, 1e-3))
    assert np.array_equal(a, b)


def test_geometric_step_preserves_signs(params):
    s = np.array([-0.5, -2.0, 1.5])
    out = geometric_rk4_step(params, s, 1e-3)
    assert np.all(np.sign(out) == np.sign(s))


def test_multiplicative_rejects_zero_coordinates(params):
    with pytest.raises(ZeroCoordinateError):
        geometric_rk4_step(params, (1.0, 0.0, 1.0), 1e-3)
    with pytest.raises(ZeroCoordinateError):
        integrate_multiplicative(
            MulKind.GEOMETRIC, params, (0.0, 1.0, 1.0), SimSettings(t_end=0.1, h=1e-3, discard=0.0)
        )


def test_bigeometric_step_basics(params):
    with pytest.raises(ValueError):
        bigeometric_rk4_step(params, 0.0, INIT, 1e-3)
    with pytest.raises(ValueError):
        bigeometric_rk4_step(params, -2.0, INIT, 1e-3)
    t_next, _ = bigeometric_rk4_step(params, 2.0, INIT, 1e-3)
    assert t_next == math.exp(math.log(2.0) + 1e-3)


def test_constant_exponent_unit_step_doubles():
    # du/ds = ln 2 over one unit step multiplies the coordinate by 2; the
    # stage combination rounds once, so the match is to an ulp, not exact
    log2 = math.log(2.0)

    def fn(_s, u):
        return np.full_like(u, log2)

    u = _rk4_nonauto(fn, 0.0, np.zeros(1), 1.0)
    assert u[0] == pytest.approx(log2, rel=1e-15)
    assert math.exp(u[0]) == pytest.approx(2.0, rel=1e-15)


def test_bigeometric_grid_uniform_in_log_time(params):
    cfg = SimSettings(t0=1.0, t_end=1.1, h=1e-3, discard=0.0)
    traj = integrate_multiplicative(MulKind.BIGEOMETRIC, params, INIT, cfg)
    assert traj.kind == "bigeometric"
    logs = np.log(traj.times)
    assert np.allclose(np.diff(logs), 1e-3, rtol=0.0, atol=1e-12)


def test_bigeometric_self_convergence(params):
    # fourth order in the log-time step against a fine reference run
    def run(n):
        cfg = SimSettings(t0=1.0, t_end=math.exp(0.2), h=0.2 / n, discard=0.0, sample_every=n)
        return integrate_multiplicative(MulKind.BIGEOMETRIC, params, INIT, cfg).states[-1]

    ref = run(25600)
    errs = [float(np.max(np.abs(run(n) - ref))) for n in (100, 200, 400)]
    ratios = [errs[i] / errs[i + 1] for i in range(2)]
    assert all(13.0 < r < 19.0 for r in ratios), (errs, ratios)


def test_multiplicative_runs_die_at_first_sign_change(params):
    # the flow crosses y = 0 shortly after t = 0.25; the frozen-sign log form
    # cannot represent that and must abort with the typed error
    with pytest.raises(BlowUpError) as err:
        integrate_multiplicative(
            MulKind.GEOMETRIC, params, INIT, SimSettings(t_end=10.0, h=1e-3, discard=0.0)
        )
    assert 0.2 < err.value.t < 0.35
    with pytest.raises(BlowUpError) as err:
        integrate_multiplicative(
            MulKind.BIGEOMETRIC, params, INIT, SimSettings(t0=1.0, t_end=10.0, h=1e-3, discard=0.0)
        )
    assert 1.2 < err.value.t < 1.3


def test_multiplicative_kind_and_t0_validation(params):
    with pytest.raises(ValueError):
        integrate_multiplicative("geometric", params, INIT, SimSettings(t_end=1.0, h=1e-3, discard=0.0))
    with pytest.raises(ValueError):
        integrate_multiplicative(
            MulKind.BIGEOMETRIC, params, INIT, SimSettings(t0=0.0, t_end=1.0, h=1e-3, discard=0.0)
        )
