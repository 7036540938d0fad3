"""Deterministic report container and renderers (JSON, CSV, text).

All payload values are JSON-safe scalars, lists and dicts; rationals are
rendered as reduced "p/q" strings with positive denominator (bare "p"
when the denominator is 1).  JSON uses sorted keys so that re-parsing and
re-serializing a report reproduces it byte-exactly; CSV flattens the same
tree into (key, value) rows with JSON-encoded cells.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

TOOL_NAME = "wphodge"
TOOL_VERSION = "0.1.0"


def rat(q) -> str:
    """Canonical rendering of an exact rational."""
    f = Fraction(q)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


@dataclass
class Report:
    command: str
    inputs: dict
    sections: dict
    status: str = "ok"
    provenance: dict = field(
        default_factory=lambda: {"tool": TOOL_NAME, "version": TOOL_VERSION}
    )
    # plain-text override for table reproductions (text format only)
    raw_text: str | None = None

    def payload(self) -> dict:
        return {
            "command": self.command,
            "inputs": self.inputs,
            "provenance": self.provenance,
            "sections": self.sections,
            "status": self.status,
        }


def to_json(report: Report) -> str:
    return json.dumps(report.payload(), sort_keys=True, indent=2) + "\n"


def flatten(value, prefix: str = "") -> list[tuple[str, object]]:
    if isinstance(value, dict):
        out = []
        for key in sorted(value):
            path = f"{prefix}.{key}" if prefix else str(key)
            out.extend(flatten(value[key], path))
        return out
    if isinstance(value, (list, tuple)):
        out = []
        for i, item in enumerate(value):
            out.extend(flatten(item, f"{prefix}[{i}]"))
        return out
    return [(prefix, value)]


def to_csv(report: Report) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(["key", "value"])
    for path, value in flatten(report.payload()):
        writer.writerow([path, json.dumps(value)])
    return buf.getvalue()


def _text_lines(value, indent: int, lines: list[str], key: str | None = None):
    pad = "  " * indent
    label = f"{pad}{key}: " if key is not None else pad
    if isinstance(value, dict):
        if key is not None:
            lines.append(f"{pad}{key}:")
        for k in sorted(value):
            _text_lines(value[k], indent + (key is not None), lines, k)
    elif isinstance(value, (list, tuple)):
        if all(not isinstance(v, (dict, list, tuple)) for v in value):
            body = ", ".join(json.dumps(v) for v in value)
            lines.append(f"{label}[{body}]")
        else:
            lines.append(f"{pad}{key}:")
            for i, item in enumerate(value):
                _text_lines(item, indent + 1, lines, f"[{i}]")
    else:
        lines.append(f"{label}{json.dumps(value)}")


def to_text(report: Report) -> str:
    lines = [f"{report.command}  status={report.status}"]
    if report.inputs:
        _text_lines(report.inputs, 0, lines, "inputs")
    for name in sorted(report.sections):
        lines.append(f"[{name}]")
        section = report.sections[name]
        if isinstance(section, dict):
            for k in sorted(section):
                _text_lines(section[k], 1, lines, k)
        else:
            _text_lines(section, 1, lines)
    return "\n".join(lines) + "\n"


def render(report: Report, fmt: str) -> str:
    if fmt == "json":
        return to_json(report)
    if fmt == "csv":
        return to_csv(report)
    return to_text(report)
