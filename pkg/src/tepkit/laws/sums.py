"""Sufficient conditions for a sum of two relative EP matrices to be relative EP.

Hypotheses are built structurally and then re-checked numerically; a draw
that misses them is regenerated rather than counted.
"""
from __future__ import annotations

import numpy as np

from ..classes import is_t_ep
from ..decompositions import rank_of, svd
from ..generators import (
    GenSpec,
    complex_gaussian,
    gen,
    random_nonsingular,
    random_partial_isometry,
    random_unitary,
)
from ..matrix import block_diag, compare, conj_transpose as ct, fro, vanishes, zeros
from ..subspaces import ranges_equal_verdict, stacked_rank_additive
from .base import Checks, Regenerate, law, require
from .instances import ep_on, orthonormal, range_basis, shape


def _conclude(tr, a, b, t, *hypotheses):
    """Check the hypotheses (both summands T-EP plus ``hypotheses``), then the sum."""
    tr.record(A=a, B=b, T=t)
    tol = tr.tol
    require(is_t_ep(a, t, tol), is_t_ep(b, t, tol), *hypotheses)
    c = Checks(tr)
    c.expect("A+B T-EP", is_t_ep(a + b, t, tol))
    return c


def _adjoint(a, b, t):
    return ct(a), ct(b), ct(t)


@law("SUM-ANTICOMM",
     covers=("A*B + B*A = 0",),
     generator="E = U diag(D,0,0) U*, F = U diag(iDH, G, 0) U*, T = U diag(T1,T4) V*",
     check="A, B T-EP with A*B + B*A = 0 => A+B T-EP")
def _sum_anticomm(tr):
    m, n = shape(tr)
    p = min(m, n)
    r1 = tr.integer(1, p)
    r2 = tr.integer(0, p - r1)
    q = r1 + r2
    rng = np.random.default_rng(tr.seed())
    u = random_unitary(m, rng)
    v = random_unitary(n, rng)
    # D = Q S has D*D = S^2 diagonal, so it commutes with the real diagonal H
    d = random_unitary(r1, rng) * np.exp(rng.uniform(-1, 1, r1))
    h = np.diag(rng.choice([-1.0, 1.0], r1) * rng.uniform(0.2, 2.0, r1))
    g = random_nonsingular(r2, rng)
    rest = m - q
    e = u @ block_diag(d, zeros(r2 + rest, r2 + rest)) @ ct(u)
    f = u @ block_diag(1j * d @ h, g, zeros(rest, rest)) @ ct(u)
    t4 = random_partial_isometry(rest, n - q, tr.integer(0, min(rest, n - q)), rng)
    t = u @ block_diag(random_unitary(q, rng), t4) @ ct(v)
    a, b = e @ t, f @ t
    c = _conclude(tr, a, b, t, compare(ct(a) @ b, -(ct(b) @ a), tr.tol))
    return c.result()


def _orthogonal_pair(tr, m, n):
    """``A = E T``, ``B = F T`` with ``R(E)`` and ``R(F)`` orthogonal inside ``R(T)``."""
    if min(m, n) < 2:
        raise Regenerate
    rng = np.random.default_rng(tr.seed())
    k = tr.integer(2, min(m, n))
    t = random_partial_isometry(m, n, k, rng)
    ra = tr.integer(1, k - 1)
    ya = range_basis(t, k, rng)[:, :ra]
    rest = t @ ct(t) - ya @ ct(ya)
    rb = tr.integer(1, k - ra)
    yb = orthonormal(rest @ complex_gaussian(rng, m, rb))
    return ep_on(ya, rng) @ t, ep_on(yb, rng) @ t, t


@law("SUM-AstarB0",
     covers=("A*B = 0",),
     generator="EP factors on orthogonal subspaces of R(T)",
     check="A, B T-EP with A*B = 0 => A+B T-EP")
def _sum_astar_b(tr):
    m, n = shape(tr, 2)
    a, b, t = _orthogonal_pair(tr, m, n)
    c = _conclude(tr, a, b, t, vanishes(ct(a) @ b, fro(a) * fro(b), tr.tol))
    return c.result()


@law("SUM-BAstar0",
     covers=("BA* = 0",),
     generator="adjoint of the A*B = 0 construction",
     check="A, B T-EP with BA* = 0 => A+B T-EP")
def _sum_b_astar(tr):
    m, n = shape(tr, 2)
    a, b, t = _adjoint(*_orthogonal_pair(tr, n, m))
    c = _conclude(tr, a, b, t, vanishes(b @ ct(a), fro(a) * fro(b), tr.tol))
    return c.result()


def _star_orthogonal(tr):
    m, n = shape(tr, 2)
    p = min(m, n)
    ra = tr.integer(1, p - 1)
    rb = tr.integer(1, p - ra)
    return gen(GenSpec("star_orthogonal_pair", m, n, ra, seed=tr.seed(), rank_b=rb))


def _star_orthogonality(tr, a, b):
    scale = fro(a) * fro(b)
    return vanishes(ct(a) @ b, scale, tr.tol), vanishes(b @ ct(a), scale, tr.tol)


@law("SUM-STARORTH",
     covers=("*-orthogonal summands",),
     generator="star_orthogonal_pair",
     check="A, B T-EP and *-orthogonal => A+B T-EP")
def _sum_starorth(tr):
    a, b, t = _star_orthogonal(tr)
    c = _conclude(tr, a, b, t, *_star_orthogonality(tr, a, b))
    return c.result()


@law("REMARK-STARORTH-RANK",
     covers=("*-orthogonal summands satisfy the rank and range-sum conditions",),
     generator="star_orthogonal_pair",
     check="rank T(A+B)*T = rank(A+B) = rank A + rank B and R(A+B) = R(A)+R(B)")
def _starorth_rank(tr):
    a, b, t = _star_orthogonal(tr)
    tr.record(A=a, B=b, T=t)
    tol = tr.tol
    require(is_t_ep(a, t, tol), is_t_ep(b, t, tol), *_star_orthogonality(tr, a, b))
    c = Checks(tr)
    s = a + b
    ranks = {
        "T(A+B)*T": rank_of(t @ ct(s) @ t, tol),
        "A+B": rank_of(s, tol),
        "A + B separately": rank_of(a, tol) + rank_of(b, tol),
        "[A B]": rank_of(np.hstack([a, b]), tol),
    }
    c.fact("ranks agree", len(set(ranks.values())) == 1, ranks=ranks)
    c.expect("R(A+B) = R(A)+R(B)", ranges_equal_verdict(s, np.hstack([a, b]), tol))
    return c.result()


def _disjoint_pair(tr, m, n):
    """Ranges inside ``R(T)`` meeting only at 0, at a bounded angle."""
    if min(m, n) < 2:
        raise Regenerate
    rng = np.random.default_rng(tr.seed())
    k = tr.integer(2, min(m, n))
    t = random_partial_isometry(m, n, k, rng)
    basis = range_basis(t, k, rng)
    ra = tr.integer(1, k - 1)
    rb = tr.integer(1, k - ra)
    ya = basis[:, :ra]
    yb = orthonormal(basis[:, ra:ra + rb] + 0.5 * ya @ complex_gaussian(rng, ra, rb))
    return ep_on(ya, rng) @ t, ep_on(yb, rng) @ t, t


@law("SUM-RANGE-DISJOINT",
     covers=("R(A) and R(B) meet only at 0",),
     generator="EP factors on independent, non-orthogonal subspaces of R(T)",
     check="A, B T-EP with R(A) n R(B) = {0} => A+B T-EP")
def _sum_range_disjoint(tr):
    m, n = shape(tr, 2)
    a, b, t = _disjoint_pair(tr, m, n)
    _require_additive(tr, a, b)
    return _conclude(tr, a, b, t).result()


@law("SUM-RANGEstar-DISJOINT",
     covers=("R(A*) and R(B*) meet only at 0",),
     generator="adjoint of the disjoint-range construction",
     check="A, B T-EP with R(A*) n R(B*) = {0} => A+B T-EP")
def _sum_rangestar_disjoint(tr):
    m, n = shape(tr, 2)
    a, b, t = _adjoint(*_disjoint_pair(tr, n, m))
    _require_additive(tr, ct(a), ct(b))
    return _conclude(tr, a, b, t).result()


def _require_additive(tr, a, b):
    if not stacked_rank_additive(a, b, tr.tol):
        raise Regenerate


@law("SUM-RANKCOND",
     covers=("rank and range-sum conditions",),
     generator="EP factors on overlapping subspaces of R(T)",
     check="rank T(A+B)*T = rank(A+B) and R(A+B) = R(A)+R(B) => A+B T-EP")
def _sum_rankcond(tr):
    m, n = shape(tr, 2)
    if min(m, n) < 2:
        raise Regenerate
    rng = np.random.default_rng(tr.seed())
    k = tr.integer(2, min(m, n))
    t = random_partial_isometry(m, n, k, rng)
    basis = range_basis(t, k, rng)
    overlap = tr.integer(1, k - 1)
    p1 = tr.integer(0, k - overlap)
    p3 = tr.integer(0, k - overlap - p1)
    x1 = basis[:, :p1]
    x2 = basis[:, p1:p1 + overlap]
    x3 = basis[:, p1 + overlap:p1 + overlap + p3]
    a = ep_on(np.hstack([x1, x2]), rng) @ t
    b = ep_on(np.hstack([x2, x3]), rng) @ t
    tol = tr.tol
    s = a + b
    f = svd(s, tol)
    # a sum that is nearly rank deficient makes every rank decision fragile
    if f.rank == 0 or f.sigma[f.rank - 1] < 1e-6 * f.sigma[0]:
        raise Regenerate
    if rank_of(t @ ct(s) @ t, tol) != f.rank:
        raise Regenerate
    return _conclude(tr, a, b, t, ranges_equal_verdict(s, np.hstack([a, b]), tol)).result()
