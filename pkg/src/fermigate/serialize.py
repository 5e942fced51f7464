"""CSV and JSON writers for states and reports.

Floats are written with 17 significant digits in CSV; JSON uses Python's
shortest round-trip representation, which is equally exact.  NaN becomes an
empty CSV cell and ``null`` in JSON.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
from pathlib import Path

import numpy as np

__all__ = [
    "format_float",
    "to_jsonable",
    "dumps_json",
    "csv_text",
    "write_atomic",
    "single_state_csv",
    "two_state_csv",
]


def format_float(x) -> str:
    if x is None:
        return ""
    if isinstance(x, (bool, np.bool_)):
        return str(bool(x)).lower()
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        return "" if math.isnan(x) else format(float(x), ".17g")
    return str(x)


def to_jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return None if math.isnan(obj) else float(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def dumps_json(obj) -> str:
    return json.dumps(to_jsonable(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def csv_text(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_float(row.get(c)) for c in columns])
    return buf.getvalue()


def write_atomic(path, text: str) -> Path:
    """Write ``text`` to ``path`` via a temporary file and rename."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(text)
    os.replace(tmp, path)
    return path


def single_state_csv(state) -> str:
    rows = [
        {"site": j, "re": a.real, "im": a.imag}
        for j, a in zip(state.chain.sites, state.amps)
    ]
    return csv_text(("site", "re", "im"), rows)


def two_state_csv(state) -> str:
    basis = state.basis
    rows = [
        {"j": j, "j_prime": jp, "re": a.real, "im": a.imag}
        for j, jp, a in zip(basis.first, basis.second, state.amps)
    ]
    return csv_text(("j", "j_prime", "re", "im"), rows)
