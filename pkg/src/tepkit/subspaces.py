"""Range and null-space relations decided through orthogonal projectors.

``R(A) = R(B)`` iff ``A A^+ = B B^+`` and ``N(A) = N(B)`` iff
``A^+ A = B^+ B``. Inclusions use the same projectors one-sidedly.
"""
from __future__ import annotations

import numpy as np

from .decompositions import pinv, rank_of
from .errors import ShapeError
from .matrix import DEFAULT_TOL, Tolerance, Verdict, as_matrix, compare


def range_projector(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    a = as_matrix(a)
    return a @ pinv(a, tol)


def row_projector(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    a = as_matrix(a)
    return pinv(a, tol) @ a


def ranges_equal_verdict(a, b, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[0] != b.shape[0]:
        raise ShapeError(f"ranges live in different spaces: {a.shape[0]} vs {b.shape[0]} rows")
    return compare(range_projector(a, tol), range_projector(b, tol), tol)


def ranges_equal(a, b, tol: Tolerance = DEFAULT_TOL) -> bool:
    return ranges_equal_verdict(a, b, tol).holds


def range_contained_verdict(a, b, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """``R(a) ⊆ R(b)``: the projector onto ``R(b)`` leaves ``a`` unchanged."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[0] != b.shape[0]:
        raise ShapeError(f"ranges live in different spaces: {a.shape[0]} vs {b.shape[0]} rows")
    return compare(a, range_projector(b, tol) @ a, tol)


def nullspace_contained_verdict(a, b, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """``N(a) ⊆ N(b)``: ``b`` annihilates ``I - a^+ a``, i.e. ``b = b a^+ a``."""
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[1]:
        raise ShapeError(f"null spaces live in different spaces: {a.shape[1]} vs {b.shape[1]} cols")
    return compare(b, b @ row_projector(a, tol), tol)


def nullspace_contained(a, b, tol: Tolerance = DEFAULT_TOL) -> bool:
    return nullspace_contained_verdict(a, b, tol).holds


def nullspaces_equal_verdict(a, b, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    a = as_matrix(a, "a")
    b = as_matrix(b, "b")
    if a.shape[1] != b.shape[1]:
        raise ShapeError(f"null spaces live in different spaces: {a.shape[1]} vs {b.shape[1]} cols")
    return compare(row_projector(a, tol), row_projector(b, tol), tol)


def nullspaces_equal(a, b, tol: Tolerance = DEFAULT_TOL) -> bool:
    return nullspaces_equal_verdict(a, b, tol).holds


def stacked_rank_additive(a, b, tol: Tolerance = DEFAULT_TOL) -> bool:
    """``R(a) ∩ R(b) = {0}`` via ``rank([a b]) = rank(a) + rank(b)``."""
    return rank_of(np.hstack([a, b]), tol) == rank_of(a, tol) + rank_of(b, tol)

