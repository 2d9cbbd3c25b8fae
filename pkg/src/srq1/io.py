"""Scan results and their CSV/JSON serialization.

CSV: ``# key=value`` metadata comment lines, a header line, then
comma-separated rows with 9 significant digits, LF newlines, "." decimal
point.  JSON mirrors the same content; non-finite and ambiguous entries are
the tagged strings "inf" and "ambiguous" in both formats.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field


@dataclass
class ScanResult:
    metadata: dict = field(default_factory=dict)
    columns: list = field(default_factory=list)
    rows: list = field(default_factory=list)


def format_number(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return "none"
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    if math.isnan(v):
        return "nan"
    return f"{v:.9g}"


def write_csv(result: ScanResult) -> str:
    lines = [f"# {key}={value}" for key, value in result.metadata.items()]
    if result.columns:
        lines.append(",".join(result.columns))
    for row in result.rows:
        lines.append(",".join(format_number(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_cell(v):
    if isinstance(v, str) or v is None or isinstance(v, bool):
        return v
    if math.isinf(v) or math.isnan(v):
        return format_number(v)
    # 9 significant digits, as in the CSV output
    return float(f"{v:.9g}")


def write_json(result: ScanResult) -> str:
    doc = {
        "metadata": {k: str(v) for k, v in result.metadata.items()},
        "columns": list(result.columns),
        "rows": [[_json_cell(v) for v in row] for row in result.rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def serialize(result: ScanResult, fmt: str) -> str:
    if fmt == "csv":
        return write_csv(result)
    if fmt == "json":
        return write_json(result)
    raise ValueError(f"unknown output format {fmt!r}")
