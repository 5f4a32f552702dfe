"""Dense complex matrices, the comparison policy, and residual verdicts.

Matrices are plain ``numpy`` arrays of dtype ``complex128`` with two
dimensions. Nothing in the package mutates an input array.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import InputError, ShapeError

EPS = np.finfo(np.float64).eps


@dataclass(frozen=True)
class Tolerance:
    """Comparison policy for floating point versions of exact identities.

    ``rank_rtol=None`` means ``max(rows, cols) * eps`` of the matrix being
    ranked.
    """

    rank_rtol: float | None = None
    eq_atol: float = 1e-12
    eq_rtol: float = 1e-10

    def __post_init__(self):
        for name in ("rank_rtol", "eq_atol", "eq_rtol"):
            value = getattr(self, name)
            if value is None and name == "rank_rtol":
                continue
            if not np.isfinite(value) or value < 0:
                raise InputError(f"tolerance {name} must be finite and nonnegative, got {value!r}")

    def rank_cutoff(self, shape) -> float:
        if self.rank_rtol is not None:
            return self.rank_rtol
        return max(shape) * EPS

    def bound(self, *norms: float) -> float:
        return self.eq_atol + self.eq_rtol * max(norms, default=0.0)


DEFAULT_TOL = Tolerance()


class Verdict(NamedTuple):
    """Boolean outcome of a residual test.

    ``ratio`` is residual over the allowed bound, so ``holds`` is
    ``ratio <= 1`` and a ratio far from 1 means a confident verdict.
    """

    holds: bool
    residual: float
    ratio: float

    def __bool__(self):
        return bool(self.holds)

    @property
    def confident(self) -> bool:
        return self.ratio <= 0.1 or self.ratio >= 10.0


def all_of(*verdicts: Verdict) -> Verdict:
    """Conjunction: holds iff every part holds; reports the worst residual."""
    return Verdict(
        all(v.holds for v in verdicts),
        max((v.residual for v in verdicts), default=0.0),
        max((v.ratio for v in verdicts), default=0.0),
    )


def as_matrix(x, name: str = "matrix") -> np.ndarray:
    """Coerce ``x`` to a finite 2-D complex128 array."""
    a = np.asarray(x, dtype=np.complex128)
    if a.ndim != 2:
        raise ShapeError(f"{name} must be two-dimensional, got ndim={a.ndim}")
    if not np.all(np.isfinite(a)):
        raise InputError(f"{name} has non-finite entries")
    return a


def conj_transpose(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    return np.ascontiguousarray(a.conj().T)


def fro(a) -> float:
    return float(np.linalg.norm(a)) if np.size(a) else 0.0


def _verdict(residual: float, bound: float) -> Verdict:
    # a zero bound (both tolerances 0) asks for exact equality
    if bound > 0:
        ratio = residual / bound
    else:
        ratio = 0.0 if residual == 0 else float("inf")
    return Verdict(ratio <= 1.0, residual, ratio)


def compare(a, b, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
    return _verdict(fro(a - b), tol.bound(fro(a), fro(b)))


def approx_eq(a, b, tol: Tolerance = DEFAULT_TOL) -> bool:
    return compare(a, b, tol).holds


def vanishes(x, scale: float, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Test ``x == 0`` where ``scale`` is the size of the operands producing it."""
    return _verdict(fro(x), tol.bound(scale))


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.complex128)


def block_diag(*blocks) -> np.ndarray:
    """Block diagonal matrix; zero-sized blocks are allowed."""
    rows = sum(b.shape[0] for b in blocks)
    cols = sum(b.shape[1] for b in blocks)
    out = zeros(rows, cols)
    i = j = 0
    for b in blocks:
        out[i:i + b.shape[0], j:j + b.shape[1]] = b
        i += b.shape[0]
        j += b.shape[1]
    return out

