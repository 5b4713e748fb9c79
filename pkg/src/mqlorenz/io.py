"""CSV trajectory emission and deterministic JSON reports.

CSV: header ``t,x,y,z``, one row per sample, floats printed with 17
significant digits (lossless round-trip for doubles), LF newlines.

JSON: every command's structured output is a ReportDocument with a schema
version, the echoed inputs, a results payload, and a warnings list. Two runs
with the same inputs produce byte-identical documents (stable key order,
floats via their shortest exact representation).
"""

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"


def _fmt(v):
    return format(float(v), ".17g")


def _write_to(sink, text):
    if hasattr(sink, "write"):
        sink.write(text)
    else:
        with open(sink, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def csv_text(traj):
    """Render a trajectory as CSV text."""
    lines = ["t,x,y,z"]
    for t, s in zip(traj.times, traj.states):
        lines.append(f"{_fmt(t)},{_fmt(s[0])},{_fmt(s[1])},{_fmt(s[2])}")
    return "\n".join(lines) + "\n"


def write_csv(traj, sink):
    """Write a trajectory to a path or file-like sink as CSV."""
    _write_to(sink, csv_text(traj))


def read_csv(source):
    """Parse CSV produced by write_csv back into (times, states) arrays.

    Round-trips bitwise: 17 significant digits reproduce every double
    exactly.
    """
    import numpy as np

    if hasattr(source, "read"):
        text = source.read()
    else:
        with open(source, "r", encoding="utf-8", newline="") as fh:
            text = fh.read()
    lines = [ln for ln in text.split("\n") if ln != ""]
    if not lines or lines[0] != "t,x,y,z":
        raise ValueError(f"not a trajectory CSV (bad header): {lines[:1]!r}")
    times = []
    states = []
    for ln in lines[1:]:
        parts = ln.split(",")
        if len(parts) != 4:
            raise ValueError(f"malformed CSV row: {ln!r}")
        t, x, y, z = (float(p) for p in parts)
        times.append(t)
        states.append((x, y, z))
    return np.array(times, dtype=float), np.array(states, dtype=float).reshape(len(states), 3)


@dataclass
class ReportDocument:
    """Structured command output: inputs echo, results, warnings."""

    command: str
    inputs: dict
    results: dict
    warnings: list = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION


def complex_entry(z):
    """JSON shape for one complex number."""
    return {"re": float(z.real), "im": float(z.imag)}


def json_text(report):
    """Render a report as deterministic JSON text."""
    doc = {
        "schema_version": report.schema_version,
        "command": report.command,
        "inputs": report.inputs,
        "results": report.results,
        "warnings": list(report.warnings),
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def write_json(report, sink):
    """Write a ReportDocument to a path or file-like sink as JSON."""
    _write_to(sink, json_text(report))
