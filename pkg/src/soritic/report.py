"""Canonical report serialization: stable bytes for identical analyses.

Reports are plain dicts of JSON-compatible values.  Serialization sorts
keys, renders floats with 17 significant digits (enough to round-trip any
double), escapes to ASCII, and terminates with a newline, so the same
analysis always produces the same bytes.
"""

from __future__ import annotations

import json
from typing import Any


def _format_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("reports must not contain NaN or infinities")
    return format(x, ".17g")


def canonical_json(value: Any) -> str:
    """Serialize to one canonical JSON line (no trailing newline)."""
    if value is None:
        return "null"
    if value is True:
        return "true"
    if value is False:
        return "false"
    if isinstance(value, int):
        return repr(value)
    if isinstance(value, float):
        return _format_float(value)
    if isinstance(value, str):
        return json.dumps(value, ensure_ascii=True)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(canonical_json(v) for v in value) + "]"
    if isinstance(value, dict):
        items = []
        for k in sorted(value, key=str):
            if not isinstance(k, str):
                raise ValueError(f"report keys must be strings, got {k!r}")
            items.append(json.dumps(k, ensure_ascii=True) + ":" + canonical_json(value[k]))
        return "{" + ",".join(items) + "}"
    raise ValueError(f"value {value!r} is not serializable into a report")


def render_json(report: dict) -> str:
    return canonical_json(report) + "\n"


def render_text(report: dict) -> str:
    """Flat `dotted.path: value` lines in sorted order, for human reading."""
    lines: list[str] = []

    def walk(prefix: str, value: Any) -> None:
        if isinstance(value, dict):
            if not value:
                lines.append(f"{prefix}: {{}}")
                return
            for k in sorted(value, key=str):
                walk(f"{prefix}.{k}" if prefix else str(k), value[k])
        elif isinstance(value, (list, tuple)):
            lines.append(f"{prefix}: {canonical_json(list(value))}")
        else:
            lines.append(f"{prefix}: {canonical_json(value)}")

    walk("", report)
    return "\n".join(lines) + "\n"
