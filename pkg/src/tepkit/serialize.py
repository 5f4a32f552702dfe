"""JSON encoding of matrices and result objects.

Matrix format: ``{"rows": m, "cols": n, "data": [[re, im], ...]}`` with
``data`` row-major. Output is deterministic for identical inputs.
"""
from __future__ import annotations

import json
import math
import re
from pathlib import Path

import numpy as np

from .errors import InputError


def matrix_to_dict(a) -> dict:
    a = np.asarray(a, dtype=np.complex128)
    rows, cols = a.shape
    return {
        "rows": int(rows),
        "cols": int(cols),
        "data": [[float(z.real), float(z.imag)] for z in a.ravel()],
    }


def matrix_from_dict(obj, name: str = "matrix") -> np.ndarray:
    if not isinstance(obj, dict):
        raise InputError(f"{name}: expected a JSON object with rows, cols, data")
    for key in ("rows", "cols", "data"):
        if key not in obj:
            raise InputError(f"{name}: missing field {key!r}")
    rows, cols, data = obj["rows"], obj["cols"], obj["data"]
    for key, value in (("rows", rows), ("cols", cols)):
        if isinstance(value, bool) or not isinstance(value, int) or value < 1:
            raise InputError(f"{name}: field {key!r} must be a positive integer, got {value!r}")
    if not isinstance(data, list) or len(data) != rows * cols:
        got = len(data) if isinstance(data, list) else type(data).__name__
        raise InputError(f"{name}: field 'data' must hold rows*cols={rows * cols} entries, got {got}")
    out = np.empty(rows * cols, dtype=np.complex128)
    for i, entry in enumerate(data):
        if (not isinstance(entry, list) or len(entry) != 2
                or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in entry)):
            raise InputError(f"{name}: field 'data[{i}]' must be a [re, im] pair of numbers")
        if not all(math.isfinite(x) for x in entry):
            raise InputError(f"{name}: field 'data[{i}]' is not finite")
        out[i] = complex(entry[0], entry[1])
    return out.reshape(rows, cols)


def load_matrix(path) -> np.ndarray:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return matrix_from_dict(obj, str(path))


def _plain(obj):
    if isinstance(obj, np.ndarray):
        return matrix_to_dict(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        # JSON has no infinities; keep the output parseable
        return x if math.isfinite(x) else None
    return obj


_NUM = r"(-?\d[\d.eE+-]*|null)"
_PAIR = re.compile(r"\[\s+" + _NUM + r",\s+" + _NUM + r"\s+\]")


def dumps(obj) -> str:
    # one [re, im] pair per line keeps matrix files diffable
    return _PAIR.sub(r"[\1, \2]", json.dumps(_plain(obj), indent=2)) + "\n"
