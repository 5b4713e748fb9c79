"""Command line front end.

Thin shell over the library: every subcommand is one library call plus
serialization. Exit codes: 0 success, 2 invalid usage or parameters,
3 numerical failure (blow-up, degenerate frame). Nothing is written to the
success stream on failure.
"""

import argparse
import sys

import numpy as np

from .analysis import (
    BenettinSettings,
    classify_stability,
    find_equilibria,
    lyapunov_spectrum,
    sweep_beta,
    volume_contraction_check,
)
from .errors import BlowUpError, DegenerateFrameError
from .integrators import MulKind, SimSettings, integrate, integrate_multiplicative
from .io import ReportDocument, complex_entry, csv_text, json_text, _fmt
from .model import SystemParams, divergence

# exponent sums farther than this from the divergence signal a misconfigured run
LYAP_SUM_WARN = 0.5


def _add_param_flags(sp):
    sp.add_argument("--sigma", type=float, default=12.0, help="sigma parameter (default 12)")
    sp.add_argument("--rho", type=float, default=8.0, help="rho parameter (default 8)")
    sp.add_argument("--beta", type=float, default=4.0, help="beta parameter (default 4)")


def _add_init_flag(sp):
    sp.add_argument(
        "--init", default="1,1,1", help="initial state as x,y,z (default 1,1,1)"
    )


def _add_sim_flags(sp, t_end, discard):
    sp.add_argument("--t0", type=float, default=0.0, help="start time (default 0)")
    sp.add_argument(
        "--t-end", dest="t_end", type=float, default=t_end,
        help=f"end time (default {t_end})",
    )
    sp.add_argument("--h", type=float, default=1e-3, help="step size (default 0.001)")
    sp.add_argument(
        "--discard", type=float, default=discard,
        help=f"drop samples before t0+discard (default {discard})",
    )
    sp.add_argument(
        "--sample-every", dest="sample_every", type=int, default=1,
        help="keep every n-th step (default 1)",
    )


def _add_lyap_flags(sp, transient, total_time):
    sp.add_argument(
        "--transient", type=float, default=transient,
        help=f"settle time before averaging (default {transient})",
    )
    sp.add_argument(
        "--total-time", dest="total_time", type=float, default=total_time,
        help=f"averaging time (default {total_time})",
    )
    sp.add_argument(
        "--renorm-interval", dest="renorm_interval", type=float, default=0.5,
        help="reorthonormalization interval (default 0.5)",
    )


def _add_out_flags(sp, formats, default_format):
    sp.add_argument(
        "--format", choices=formats, default=default_format,
        help=f"output format (default {default_format})",
    )
    sp.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mqlorenz",
        description="Modified quadratic Lorenz system: simulation and analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("simulate", help="integrate the flow, emit t,x,y,z samples")
    _add_param_flags(sp)
    _add_init_flag(sp)
    _add_sim_flags(sp, t_end=1000.0, discard=0.0)
    _add_out_flags(sp, ["csv", "json"], "csv")

    sp = sub.add_parser(
        "msim", help="integrate a multiplicative (geometric/bigeometric) form"
    )
    sp.add_argument(
        "--kind", required=True, choices=[k.value for k in MulKind],
        help="which multiplicative integrator to run",
    )
    _add_param_flags(sp)
    _add_init_flag(sp)
    _add_sim_flags(sp, t_end=1000.0, discard=0.0)
    _add_out_flags(sp, ["csv", "json"], "csv")

    sp = sub.add_parser("equilibria", help="list the rest points")
    _add_param_flags(sp)
    _add_out_flags(sp, ["json", "csv"], "json")

    sp = sub.add_parser("stability", help="eigenvalues and classification per rest point")
    _add_param_flags(sp)
    _add_out_flags(sp, ["json"], "json")

    sp = sub.add_parser("lyapunov", help="Lyapunov spectrum and dimension")
    _add_param_flags(sp)
    _add_init_flag(sp)
    sp.add_argument("--h", type=float, default=1e-3, help="step size (default 0.001)")
    _add_lyap_flags(sp, transient=100.0, total_time=1000.0)
    _add_out_flags(sp, ["json"], "json")

    sp = sub.add_parser("contraction", help="verify the volume contraction rate")
    _add_param_flags(sp)
    _add_init_flag(sp)
    sp.add_argument("--time", type=float, default=1.0, help="measurement time (default 1)")
    sp.add_argument("--h", type=float, default=1e-3, help="step size (default 0.001)")
    _add_out_flags(sp, ["json"], "json")

    sp = sub.add_parser("sweep", help="summaries across a list of beta values")
    sp.add_argument("--sigma", type=float, default=12.0, help="sigma parameter (default 12)")
    sp.add_argument("--rho", type=float, default=8.0, help="rho parameter (default 8)")
    sp.add_argument(
        "--betas", default="0.1,0.5,2,4,10",
        help="comma-separated beta values (default 0.1,0.5,2,4,10)",
    )
    _add_init_flag(sp)
    _add_sim_flags(sp, t_end=50.0, discard=10.0)
    _add_lyap_flags(sp, transient=5.0, total_time=25.0)
    _add_out_flags(sp, ["json", "csv"], "json")

    return parser


def _parse_triple(text, what):
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"{what} must be three comma-separated numbers, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError:
        raise ValueError(f"{what} must be numeric, got {text!r}") from None


def _params(ns):
    return SystemParams(ns.sigma, ns.rho, ns.beta)


def _echo_params(ns):
    return {"sigma": ns.sigma, "rho": ns.rho, "beta": ns.beta}


def _echo_sim(ns):
    return {
        "t0": ns.t0,
        "t_end": ns.t_end,
        "h": ns.h,
        "discard": ns.discard,
        "sample_every": ns.sample_every,
    }


def _traj_results(traj):
    return {
        "kind": traj.kind,
        "times": [float(t) for t in traj.times],
        "states": [[float(v) for v in row] for row in traj.states],
    }


def _sim_settings(ns):
    return SimSettings(
        t0=ns.t0, t_end=ns.t_end, h=ns.h, discard=ns.discard, sample_every=ns.sample_every
    )


def _cmd_simulate(ns):
    traj = integrate(_params(ns), _parse_triple(ns.init, "--init"), _sim_settings(ns))
    if ns.format == "csv":
        return csv_text(traj)
    report = ReportDocument(
        command="simulate",
        inputs=_echo_params(ns) | {"init": ns.init} | _echo_sim(ns),
        results=_traj_results(traj),
    )
    return json_text(report)


def _cmd_msim(ns):
    traj = integrate_multiplicative(
        MulKind(ns.kind), _params(ns), _parse_triple(ns.init, "--init"), _sim_settings(ns)
    )
    if ns.format == "csv":
        return csv_text(traj)
    report = ReportDocument(
        command="msim",
        inputs={"kind": ns.kind} | _echo_params(ns) | {"init": ns.init} | _echo_sim(ns),
        results=_traj_results(traj),
    )
    return json_text(report)


def _cmd_equilibria(ns):
    eqs = find_equilibria(_params(ns))
    if ns.format == "csv":
        lines = ["label,x,y,z"]
        for e in eqs:
            loc = e.location
            lines.append(f"{e.label.value},{_fmt(loc[0])},{_fmt(loc[1])},{_fmt(loc[2])}")
        return "\n".join(lines) + "\n"
    report = ReportDocument(
        command="equilibria",
        inputs=_echo_params(ns),
        results={
            "equilibria": [
                {"label": e.label.value, "location": [float(v) for v in e.location]}
                for e in eqs
            ]
        },
    )
    return json_text(report)


def _cmd_stability(ns):
    params = _params(ns)
    reports = []
    for e in find_equilibria(params):
        rep = classify_stability(e, params)
        reports.append(
            {
                "label": e.label.value,
                "location": [float(v) for v in e.location],
                "eigenvalues": [complex_entry(ev) for ev in rep.eigenvalues],
                "classification": rep.classification.value,
                "annotation": rep.annotation,
            }
        )
    report = ReportDocument(
        command="stability", inputs=_echo_params(ns), results={"reports": reports}
    )
    return json_text(report)


def _cmd_lyapunov(ns):
    params = _params(ns)
    cfg = BenettinSettings(
        h=ns.h,
        transient=ns.transient,
        total_time=ns.total_time,
        renorm_interval=ns.renorm_interval,
    )
    spec = lyapunov_spectrum(params, _parse_triple(ns.init, "--init"), cfg)
    total = float(np.sum(spec.exponents))
    div = divergence(params)
    warnings = []
    if abs(total - div) > LYAP_SUM_WARN:
        warnings.append(
            f"exponent sum {total:.6f} differs from the divergence {div:.6f} "
            f"by more than {LYAP_SUM_WARN}; the run is too short or misconfigured"
        )
    report = ReportDocument(
        command="lyapunov",
        inputs=_echo_params(ns)
        | {
            "init": ns.init,
            "h": ns.h,
            "transient": ns.transient,
            "total_time": ns.total_time,
            "renorm_interval": ns.renorm_interval,
        },
        results={
            "exponents": [float(v) for v in spec.exponents],
            "sum": total,
            "divergence": div,
            "dimension": spec.dimension,
        },
        warnings=warnings,
    )
    return json_text(report)


def _cmd_contraction(ns):
    params = _params(ns)
    measured, theoretical = volume_contraction_check(
        params, _parse_triple(ns.init, "--init"), ns.time, ns.h
    )
    report = ReportDocument(
        command="contraction",
        inputs=_echo_params(ns) | {"init": ns.init, "time": ns.time, "h": ns.h},
        results={
            "measured_log_rate": measured,
            "theoretical": theoretical,
            "relative_error": abs((measured - theoretical) / theoretical),
        },
    )
    return json_text(report)


def _cell_dict(cell):
    return {
        "beta": cell.beta,
        "z_min": cell.z_min,
        "z_max": cell.z_max,
        "x_extent": cell.x_extent,
        "largest_lyapunov": cell.largest_lyapunov,
        "bounded": cell.bounded,
        "error": cell.error,
    }


def _cmd_sweep(ns):
    betas = [float(b) for b in ns.betas.split(",") if b != ""]
    if not betas:
        raise ValueError(f"--betas must list at least one value, got {ns.betas!r}")
    p_base = SystemParams(ns.sigma, ns.rho, betas[0])
    cfg = _sim_settings(ns)
    lyap_cfg = BenettinSettings(
        h=ns.h,
        transient=ns.transient,
        total_time=ns.total_time,
        renorm_interval=ns.renorm_interval,
    )
    rep = sweep_beta(p_base, betas, cfg, lyap_cfg, init=_parse_triple(ns.init, "--init"))
    if ns.format == "csv":
        lines = ["beta,z_min,z_max,x_extent,largest_lyapunov,bounded,error"]
        for cell in rep.cells:
            vals = [
                _fmt(cell.beta),
                "" if cell.z_min is None else _fmt(cell.z_min),
                "" if cell.z_max is None else _fmt(cell.z_max),
                "" if cell.x_extent is None else _fmt(cell.x_extent),
                "" if cell.largest_lyapunov is None else _fmt(cell.largest_lyapunov),
                "true" if cell.bounded else "false",
                "" if cell.error is None else cell.error.replace(",", ";"),
            ]
            lines.append(",".join(vals))
        return "\n".join(lines) + "\n"
    report = ReportDocument(
        command="sweep",
        inputs={"sigma": ns.sigma, "rho": ns.rho, "betas": betas, "init": ns.init}
        | _echo_sim(ns)
        | {
            "transient": ns.transient,
            "total_time": ns.total_time,
            "renorm_interval": ns.renorm_interval,
        },
        results={
            "sigma": rep.sigma,
            "rho": rep.rho,
            "cells": [_cell_dict(c) for c in rep.cells],
        },
    )
    return json_text(report)


_DISPATCH = {
    "simulate": _cmd_simulate,
    "msim": _cmd_msim,
    "equilibria": _cmd_equilibria,
    "stability": _cmd_stability,
    "lyapunov": _cmd_lyapunov,
    "contraction": _cmd_contraction,
    "sweep": _cmd_sweep,
}


def run_cli(argv=None):
    """Parse argv, run one command, return the process exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        text = _DISPATCH[ns.command](ns)
    except (BlowUpError, DegenerateFrameError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    if ns.out:
        with open(ns.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main():
    raise SystemExit(run_cli(sys.argv[1:]))
