"""Qualitative analysis: equilibria, linear stability, Lyapunov spectra,
attractor dimension, dissipativity verification, and parameter sweeps.

Solving the equilibrium system sigma*(yz - x) = 0, x*(rho - z) = 0,
(xy)^2 = beta*z exactly gives two isolated symmetric points

    E+- = (+-(beta * rho^3)^(1/4), +-(beta / rho)^(1/4), rho)

together with the entire invariant line {(0, y, 0) : y real}; the origin O
is the conventional representative of that line. The Jacobian at every line
point has eigenvalues {0, -beta, -sigma}: the zero is the direction along
the line, and the line is transversally attracting.
"""

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import BlowUpError
from .integrators import _rk4_scalar, _var_rk4_scalar, integrate
from .linalg3 import SNAP_TOL, eigenvalues3, gram_schmidt3
from .model import SystemParams, _as_state, _require_finite, apply_symmetry, divergence, jacobian, vector_field

DEFAULT_INIT = (1.0, 1.0, 1.0)


class EquilibriumLabel(enum.Enum):
    O = "O"
    E_PLUS = "E+"
    E_MINUS = "E-"


@dataclass(frozen=True, eq=False)
class Equilibrium:
    """A rest point of the flow; the field's residual there is < 1e-10."""

    label: EquilibriumLabel
    location: np.ndarray


class StabilityClass(enum.Enum):
    STABLE_NODE = "StableNode"
    STABLE_FOCUS = "StableFocus"
    UNSTABLE_SADDLE_FOCUS = "UnstableSaddleFocus"
    UNSTABLE = "Unstable"
    DEGENERATE = "Degenerate"


@dataclass(frozen=True, eq=False)
class StabilityReport:
    """Eigenvalues and their sign-pattern classification at an equilibrium.

    ``annotation`` carries caveats the classification enum cannot: for a
    degenerate point it records what the zero eigenvalue means and any
    conflicting verdict of record.
    """

    equilibrium: Equilibrium
    eigenvalues: tuple
    classification: StabilityClass
    annotation: str | None = None


@dataclass(frozen=True)
class BenettinSettings:
    """Settings for the tangent-frame Lyapunov computation."""

    h: float = 1e-3
    transient: float = 100.0
    total_time: float = 1000.0
    renorm_interval: float = 0.5

    def __post_init__(self):
        for name in ("h", "transient", "total_time", "renorm_interval"):
            value = getattr(self, name)
            if not np.isfinite(value) or value <= 0.0:
                raise ValueError(f"{name} must be positive and finite, got {value!r}")
        if self.renorm_interval < self.h:
            raise ValueError(
                f"renorm_interval {self.renorm_interval!r} must be at least h {self.h!r}"
            )


@dataclass(frozen=True, eq=False)
class LyapunovSpectrum:
    """Exponents sorted descending (1/time units) and the resulting dimension."""

    exponents: np.ndarray
    dimension: float
    settings: BenettinSettings

    @property
    def largest(self):
        return float(self.exponents[0])


@dataclass(frozen=True, eq=False)
class SweepCell:
    """Summary statistics for one parameter value of a sweep.

    ``bounded`` is True when the trajectory stayed inside the blow-up limit;
    a failure in either the run or the exponent computation is recorded in
    ``error`` (statistics that could not be computed are None).
    """

    beta: float
    z_min: float | None
    z_max: float | None
    x_extent: float | None
    largest_lyapunov: float | None
    bounded: bool
    error: str | None = None


@dataclass(frozen=True, eq=False)
class SweepReport:
    sigma: float
    rho: float
    cells: tuple


def find_equilibria(p):
    """The three isolated/representative rest points: O, E+, E-.

    E- is exactly the reflection of E+. O represents the invariant line
    {(0, y, 0)} of rest points that the symmetric pair coexists with (see
    the module docstring); callers probing stability at O should expect a
    zero eigenvalue along that line.
    """
    rho3 = p.rho * p.rho * p.rho
    e_plus = np.array([
        (p.beta * rho3) ** 0.25,
        (p.beta / p.rho) ** 0.25,
        p.rho,
    ])
    return [
        Equilibrium(EquilibriumLabel.O, np.zeros(3)),
        Equilibrium(EquilibriumLabel.E_PLUS, e_plus),
        Equilibrium(EquilibriumLabel.E_MINUS, apply_symmetry(e_plus)),
    ]


def _classification(evs, tol):
    """Map an eigenvalue triple to (class, annotation) by real-part signs."""
    complex_re = [ev.real for ev in evs if ev.imag != 0.0]
    real_re = [ev.real for ev in evs if ev.imag == 0.0]
    if any(ev.real > tol for ev in evs):
        if complex_re and min(complex_re) > tol and real_re and max(real_re) < -tol:
            return StabilityClass.UNSTABLE_SADDLE_FOCUS, None
        return StabilityClass.UNSTABLE, None
    if any(abs(ev.real) <= tol for ev in evs):
        annotation = (
            "linearization inconclusive: an eigenvalue with zero real part "
            "(the direction along the line of rest points through this point); "
            "the remaining eigenvalues are negative, so the line attracts "
            "transversally. A verdict of record calls this point unstable, "
            "which the linear test neither supports nor refutes."
        )
        return StabilityClass.DEGENERATE, annotation
    if complex_re:
        return StabilityClass.STABLE_FOCUS, None
    return StabilityClass.STABLE_NODE, None


def classify_stability(e, p):
    """Classify an equilibrium by the sign pattern of its eigenvalues.

    Real parts above the snap tolerance mean unstable (a saddle-focus when a
    complex pair is expanding and the real eigenvalue contracts); all parts
    below it mean a stable node or focus; a vanishing real part is reported
    as Degenerate because the linear test is inconclusive there.
    """
    evs = eigenvalues3(jacobian(e.location, p))
    tol = SNAP_TOL * (1.0 + max(abs(ev.real) for ev in evs))
    cls, annotation = _classification(evs, tol)
    return StabilityReport(
        equilibrium=e, eigenvalues=tuple(evs), classification=cls, annotation=annotation
    )


def kaplan_yorke(exponents):
    """Fractal dimension estimate from a descending exponent triple.

    With partial sums S_k, let j be the largest index with S_j >= 0; the
    dimension is j + S_j / |l_{j+1}|. All-negative spectra give 0; spectra
    whose full sum is still nonnegative give 3.
    """
    l1, l2, l3 = (float(v) for v in exponents)
    if not (l1 >= l2 >= l3):
        raise ValueError(f"exponents must be sorted descending, got {(l1, l2, l3)!r}")
    s1 = l1
    s2 = l1 + l2
    s3 = s2 + l3
    if s1 < 0.0:
        return 0.0
    if s3 >= 0.0:
        return 3.0
    if s2 >= 0.0:
        return 2.0 + s2 / abs(l3)
    return 1.0 + s1 / abs(l2)


def lyapunov_spectrum(p, init, cfg):
    """Full Lyapunov spectrum by tangent-frame integration.

    Integrates past the transient, then advances the state with an
    orthonormal tangent frame, reorthonormalizing every renorm_interval and
    accumulating the log growth factors; exponents are the accumulated logs
    over total_time, sorted descending. The sum of the exponents equals the
    (constant) divergence up to rounding, whatever the trajectory does.
    """
    arr = _as_state(init)
    _require_finite(arr)
    if float(np.linalg.norm(vector_field(arr, p))) == 0.0:
        raise ValueError(f"init {arr!r} is a rest point; the spectrum there is the Jacobian's")
    sig, rho, bet = p.sigma, p.rho, p.beta
    h = cfg.h
    x, y, z = float(arr[0]), float(arr[1]), float(arr[2])
    for k in range(_round_steps(cfg.transient, h)):
        x, y, z = _rk4_scalar(sig, rho, bet, x, y, z, h)
        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(z)):
            raise BlowUpError(
                f"transient diverged at t={(k + 1) * h!r}", t=(k + 1) * h, state=None
            )
    frame = np.eye(3)
    acc = np.zeros(3)
    n = _round_steps(cfg.total_time, h)
    renorm_every = max(1, int(round(cfg.renorm_interval / h)))
    since_renorm = 0
    for k in range(1, n + 1):
        x, y, z, frame = _var_rk4_scalar(sig, rho, bet, x, y, z, frame, h)
        since_renorm += 1
        if since_renorm == renorm_every:
            if not (
                math.isfinite(x)
                and math.isfinite(y)
                and math.isfinite(z)
                and np.all(np.isfinite(frame))
            ):
                raise BlowUpError(f"averaging run diverged at step {k}", state=None)
            frame, norms = gram_schmidt3(frame)
            acc += np.log(norms)
            since_renorm = 0
    if since_renorm:
        if not np.all(np.isfinite(frame)):
            raise BlowUpError(f"averaging run diverged at step {n}", state=None)
        frame, norms = gram_schmidt3(frame)
        acc += np.log(norms)
    exponents = np.sort(acc / cfg.total_time)[::-1].copy()
    return LyapunovSpectrum(
        exponents=exponents, dimension=kaplan_yorke(exponents), settings=cfg
    )


def _round_steps(span, h):
    n = int(round(span / h))
    if n < 1:
        raise ValueError(f"span {span!r} shorter than one step h={h!r}")
    return n


def volume_contraction_check(p, init, t, h):
    """Measure the phase-volume log-contraction rate along a trajectory.

    Propagates an identity tangent frame for time ``t`` (renormalizing
    periodically so nothing underflows) and accumulates ln det of the frame.

    Returns
    -------
    (measured_log_rate, theoretical)
        measured = (ln det)/t; theoretical = divergence(p). For this system
        the two agree to rounding because the divergence is constant.
    """
    if not np.isfinite(t) or t <= 0.0:
        raise ValueError(f"t must be positive and finite, got {t!r}")
    arr = _as_state(init)
    _require_finite(arr)
    sig, rho, bet = p.sigma, p.rho, p.beta
    x, y, z = float(arr[0]), float(arr[1]), float(arr[2])
    frame = np.eye(3)
    acc = 0.0
    n = _round_steps(t, h)
    renorm_every = max(1, int(round(0.25 / h)))
    since_renorm = 0
    for k in range(1, n + 1):
        x, y, z, frame = _var_rk4_scalar(sig, rho, bet, x, y, z, frame, h)
        since_renorm += 1
        if since_renorm == renorm_every:
            if not (
                math.isfinite(x)
                and math.isfinite(y)
                and math.isfinite(z)
                and np.all(np.isfinite(frame))
            ):
                raise BlowUpError(f"contraction run diverged at step {k}", state=None)
            frame, norms = gram_schmidt3(frame)
            acc += float(np.sum(np.log(norms)))
            since_renorm = 0
    if since_renorm:
        if not np.all(np.isfinite(frame)):
            raise BlowUpError(f"contraction run diverged at step {n}", state=None)
        frame, norms = gram_schmidt3(frame)
        acc += float(np.sum(np.log(norms)))
    return acc / t, divergence(p)


def sweep_beta(p_base, betas, cfg, lyap_cfg, init=DEFAULT_INIT):
    """Run trajectory + spectrum summaries across a list of beta values.

    sigma and rho come from ``p_base``. Each cell records the sampled
    trajectory's z range and x extent, the largest Lyapunov exponent, and a
    bounded flag; a failure in one cell is recorded there (error string,
    None statistics) and the sweep continues. Cells are bit-identical to
    isolated runs with the same settings, in input order.
    """
    betas = [float(b) for b in betas]
    if not betas:
        raise ValueError("betas must be a nonempty list")
    cells = []
    for beta in betas:
        z_min = z_max = x_extent = largest = None
        bounded = False
        errors = []
        try:
            params = SystemParams(p_base.sigma, p_base.rho, beta)
        except ValueError as exc:
            cells.append(
                SweepCell(beta, None, None, None, None, False, error=str(exc))
            )
            continue
        try:
            traj = integrate(params, init, cfg)
            if len(traj) == 0:
                raise ValueError("run produced no samples; lower discard or sample_every")
            z_min = float(np.min(traj.states[:, 2]))
            z_max = float(np.max(traj.states[:, 2]))
            x_extent = float(np.max(traj.states[:, 0]) - np.min(traj.states[:, 0]))
            bounded = True
        except (BlowUpError, ValueError) as exc:
            errors.append(f"trajectory: {exc}")
        try:
            largest = float(lyapunov_spectrum(params, init, lyap_cfg).exponents[0])
        except (BlowUpError, ValueError) as exc:
            errors.append(f"spectrum: {exc}")
        cells.append(
            SweepCell(
                beta=beta,
                z_min=z_min,
                z_max=z_max,
                x_extent=x_extent,
                largest_lyapunov=largest,
                bounded=bounded,
                error="; ".join(errors) if errors else None,
            )
        )
    return SweepReport(sigma=p_base.sigma, rho=p_base.rho, cells=tuple(cells))
