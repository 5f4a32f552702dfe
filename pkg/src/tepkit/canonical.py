"""Canonical forms of relative EP matrices and pseudoinverse shortcuts.

The factorizations are built exactly the way the existence arguments build
them: partition ``T`` in the singular (or Hartwig-Spindelböck) basis of
``A`` and read ``D`` off the blocks. Nothing is fitted or optimized, so a
failing invariant points at a single construction step.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .classes import require_pair, is_ep, is_partial_isometry, is_t_ep
from .decompositions import hs_decompose, pinv, svd
from .errors import DomainError
from .matrix import (
    DEFAULT_TOL,
    Tolerance,
    Verdict,
    block_diag,
    compare,
    conj_transpose as ct,
    fro,
    identity,
    vanishes,
    zeros,
)


@dataclass(frozen=True)
class TepCanonical:
    """``A = U diag(D, 0) U^* T`` together with the blocks of ``T``.

    Rectangular kind: ``T = U diag(T1, T4) V^*`` (``t2``, ``t3`` are the
    numerically vanishing off-diagonal blocks of ``U^* T V``).
    Square kind: ``T = U [[T1, T2], [T3, T4]] U^*`` and ``v`` is ``None``.
    """

    kind: str
    rank: int
    u: np.ndarray
    d: np.ndarray
    v: np.ndarray | None
    t1: np.ndarray
    t2: np.ndarray
    t3: np.ndarray
    t4: np.ndarray
    ep_factor: np.ndarray

    def core(self) -> np.ndarray:
        m = self.u.shape[0]
        return block_diag(self.d, zeros(m - self.rank, m - self.rank))

    def reconstruct(self, t) -> np.ndarray:
        return self.u @ self.core() @ ct(self.u) @ t

    def t_in_basis(self) -> np.ndarray:
        return np.block([[self.t1, self.t2], [self.t3, self.t4]])

    def pinv(self, t) -> np.ndarray:
        """``A^+ = T^* U diag(D^{-1}, 0) U^*``."""
        m = self.u.shape[0]
        inv_core = block_diag(np.linalg.inv(self.d), zeros(m - self.rank, m - self.rank))
        return ct(t) @ self.u @ inv_core @ ct(self.u)

    def residuals(self, a, t, tol: Tolerance = DEFAULT_TOL) -> dict[str, Verdict]:
        """Every structural invariant of the form as a named verdict."""
        r = self.rank
        e = self.ep_factor
        tt = t @ ct(t)
        out = {
            "reconstruction": compare(a, self.reconstruct(t), tol),
            "ep_factor_is_ep": is_ep(e, tol),
            "ep_factor_product": compare(a, e @ t, tol),
            "ep_factor_left": compare(tt @ e, e, tol),
            "ep_factor_right": compare(e @ tt, e, tol),
            "ep_factor_core": compare(e, self.u @ self.core() @ ct(self.u), tol),
            "d_nonsingular": _nonsingular(self.d, tol),
        }
        if self.kind == "rectangular":
            out["t_block_form"] = compare(t, self.u @ block_diag(self.t1, self.t4) @ ct(self.v), tol)
            out["t1_coisometry"] = compare(self.t1 @ ct(self.t1), identity(r), tol)
            out["t4_partial_isometry"] = (
                is_partial_isometry(self.t4, tol) if self.t4.size else Verdict(True, 0.0, 0.0)
            )
        else:
            out["t_block_form"] = compare(t, self.u @ self.t_in_basis() @ ct(self.u), tol)
            out["row_blocks_coisometry"] = compare(
                self.t1 @ ct(self.t1) + self.t2 @ ct(self.t2), identity(r), tol)
            out["cross_blocks_vanish"] = vanishes(
                self.t3 @ ct(self.t1) + self.t4 @ ct(self.t2), fro(t), tol)
        return out


def _nonsingular(d, tol):
    s = np.linalg.svd(d, compute_uv=False)
    if s.size == 0 or s[0] == 0:
        return Verdict(False, float("inf"), float("inf"))
    cutoff = tol.rank_cutoff(d.shape)
    ratio = cutoff * s[0] / s[-1]
    return Verdict(bool(ratio < 1.0), float(ratio), float(ratio))


def _require_t_ep(a, t, tol):
    a, t = require_pair(a, t, tol)
    v = is_t_ep(a, t, tol)
    if not v.holds:
        raise DomainError(
            f"A is not T-EP (definition residual {v.residual:.3e})",
            {"DEF": v.residual},
        )
    return a, t


def tep_canonical_rect(a, t, tol: Tolerance = DEFAULT_TOL) -> TepCanonical:
    """Canonical form through the SVD of ``A``.

    With ``A = U diag(S, 0) V^*`` the matrix ``U^* T V`` is block diagonal
    with a unitary leading block ``T1``, and ``D = S T1^*``.
    """
    a, t = _require_t_ep(a, t, tol)
    f = svd(a, tol)
    r = f.rank
    if r == 0:
        raise DomainError("rank zero: the zero matrix has no canonical form with r>0", {"rank": 0})
    b = ct(f.u) @ t @ f.v
    t1 = b[:r, :r]
    d = np.diag(f.sigma[:r]).astype(np.complex128) @ ct(t1)
    m = a.shape[0]
    e = f.u @ block_diag(d, zeros(m - r, m - r)) @ ct(f.u)
    return TepCanonical(
        kind="rectangular", rank=r, u=f.u, d=d, v=f.v,
        t1=t1, t2=b[:r, r:], t3=b[r:, :r], t4=b[r:, r:], ep_factor=e,
    )


def tep_canonical_square(a, t, tol: Tolerance = DEFAULT_TOL) -> TepCanonical:
    """Canonical form through the Hartwig-Spindelböck form of ``A``.

    ``D = S K T1^* + S L T2^*`` where ``T1``, ``T2`` are the leading block
    row of ``U^* T U``.
    """
    a, t = _require_t_ep(a, t, tol)
    if a.shape[0] != a.shape[1]:
        raise DomainError(f"square canonical form needs square matrices, got {a.shape}")
    hs = hs_decompose(a, tol)
    r, u = hs.r, hs.u
    b = ct(u) @ t @ u
    t1, t2 = b[:r, :r], b[:r, r:]
    d = hs.sigma_block @ hs.k @ ct(t1) + hs.sigma_block @ hs.l @ ct(t2)
    n = a.shape[0]
    c = u @ block_diag(d, zeros(n - r, n - r)) @ ct(u)
    return TepCanonical(
        kind="square", rank=r, u=u, d=d, v=None,
        t1=t1, t2=t2, t3=b[r:, :r], t4=b[r:, r:], ep_factor=c,
    )


def ep_factor(a, t, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """The EP matrix ``E = A T^*`` with ``A = E T`` and ``T T^* E = E``."""
    a, t = _require_t_ep(a, t, tol)
    return a @ ct(t)


def pinv_via_factor(a, t, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """``A^+ = T^* E^+``."""
    e = ep_factor(a, t, tol)
    return ct(t) @ pinv(e, tol)


PINV_IDENTITIES = (
    "(T*A)+ = A+T",
    "(AT*)+ = TA+",
    "(T*AT*)+ = TA+T",
    "(TA*)+ = (A*)+T*",
    "(A*T)+ = T*(A*)+",
    "(TA*T)+ = T*(A*)+T*",
    "(TA+)+ = AT*",
    "(A+T)+ = T*A",
    "(TA+T)+ = T*AT*",
)


def pinv_identities(a, t, tol: Tolerance = DEFAULT_TOL) -> dict[str, Verdict]:
    """Nine pseudoinverse product identities valid for relative EP pairs.

    Both sides are computed independently with the SVD pseudoinverse.
    """
    a, t = _require_t_ep(a, t, tol)
    p = lambda x: pinv(x, tol)  # noqa: E731
    ah, th = ct(a), ct(t)
    ap, ahp = p(a), p(ah)
    pairs = (
        (p(th @ a), ap @ t),
        (p(a @ th), t @ ap),
        (p(th @ a @ th), t @ ap @ t),
        (p(t @ ah), ahp @ th),
        (p(ah @ t), th @ ahp),
        (p(t @ ah @ t), th @ ahp @ th),
        (p(t @ ap), a @ th),
        (p(ap @ t), th @ a),
        (p(t @ ap @ t), th @ a @ th),
    )
    return {name: compare(lhs, rhs, tol) for name, (lhs, rhs) in zip(PINV_IDENTITIES, pairs)}
