"""SVD, numerical rank, Moore-Penrose inverse, Hartwig-Spindelböck form.

All rank decisions go through :func:`svd` so that :func:`pinv` and
:func:`rank_of` never disagree about where the numerical rank cuts off.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DomainError, NumericalError, ShapeError
from .matrix import DEFAULT_TOL, Tolerance, as_matrix, conj_transpose, zeros

# entries below this magnitude are skipped when fixing column phases
_PHASE_FLOOR = 1e-12


@dataclass(frozen=True)
class SvdResult:
    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray
    rank: int

    def reconstruct(self) -> np.ndarray:
        m, n = self.u.shape[0], self.v.shape[0]
        k = len(self.sigma)
        return (self.u[:, :k] * self.sigma) @ conj_transpose(self.v[:, :k]) if k else zeros(m, n)


@dataclass(frozen=True)
class HSDecomposition:
    """``A = u @ [[sigma_block @ k, sigma_block @ l], [0, 0]] @ u^*``."""

    u: np.ndarray
    sigma_block: np.ndarray
    k: np.ndarray
    l: np.ndarray
    r: int

    def reconstruct(self) -> np.ndarray:
        n = self.u.shape[0]
        core = zeros(n, n)
        core[:self.r, :self.r] = self.sigma_block @ self.k
        core[:self.r, self.r:] = self.sigma_block @ self.l
        return self.u @ core @ conj_transpose(self.u)

    def pinv(self) -> np.ndarray:
        n = self.u.shape[0]
        inv_sigma = np.diag(1.0 / np.diag(self.sigma_block).real).astype(np.complex128)
        core = zeros(n, n)
        core[:self.r, :self.r] = conj_transpose(self.k) @ inv_sigma
        core[self.r:, :self.r] = conj_transpose(self.l) @ inv_sigma
        return self.u @ core @ conj_transpose(self.u)

    def range_projector(self) -> np.ndarray:
        return self.u[:, :self.r] @ conj_transpose(self.u[:, :self.r])


def _raw_svd(a):
    try:
        return np.linalg.svd(a, full_matrices=True)
    except np.linalg.LinAlgError:
        pass
    # gesdd occasionally fails where the slower QR-iteration driver converges
    try:
        return scipy.linalg.svd(a, full_matrices=True, lapack_driver="gesvd")
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"SVD did not converge: {exc}", iterations=None) from exc


def _unit_phases(cols: np.ndarray) -> np.ndarray:
    """Phase factors making each column's first non-negligible entry real positive."""
    mags = np.abs(cols)
    first = np.argmax(mags > _PHASE_FLOOR, axis=0)
    lead = cols[first, np.arange(cols.shape[1])]
    phases = np.ones(cols.shape[1], dtype=np.complex128)
    nz = np.abs(lead) > 0
    phases[nz] = np.conj(lead[nz]) / np.abs(lead[nz])
    return phases


def svd(a, tol: Tolerance = DEFAULT_TOL) -> SvdResult:
    """Full SVD ``a = u @ diag(sigma) @ v^*`` with canonical column phases."""
    a = as_matrix(a, "a")
    m, n = a.shape
    if m == 0 or n == 0:
        raise ShapeError("svd needs a nonempty matrix")
    u, s, vh = _raw_svd(a)
    v = conj_transpose(vh)
    k = len(s)
    ph = _unit_phases(u)
    u = u * ph
    # paired right vectors get the same phase so u_j s_j v_j^* is unchanged
    v[:, :k] = v[:, :k] * ph[:k]
    if n > k:
        v[:, k:] = v[:, k:] * _unit_phases(v[:, k:])
    rank = 0
    if k and s[0] > 0:
        rank = int(np.count_nonzero(s > tol.rank_cutoff(a.shape) * s[0]))
    return SvdResult(u=u, sigma=s, v=v, rank=rank)


def rank_of(a, tol: Tolerance = DEFAULT_TOL) -> int:
    a = as_matrix(a, "a")
    if a.size == 0:
        return 0
    return svd(a, tol).rank


def pinv(a, tol: Tolerance = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose inverse from the truncated SVD."""
    a = as_matrix(a, "a")
    m, n = a.shape
    if a.size == 0:
        return zeros(n, m)
    f = svd(a, tol)
    r = f.rank
    return (f.v[:, :r] / f.sigma[:r]) @ conj_transpose(f.u[:, :r])


def penrose_residuals(a, x) -> tuple[float, float, float, float]:
    """Frobenius residuals of the four Penrose conditions for candidate ``x``."""
    ax = a @ x
    xa = x @ a
    return (
        float(np.linalg.norm(ax @ a - a)),
        float(np.linalg.norm(xa @ x - x)),
        float(np.linalg.norm(conj_transpose(ax) - ax)),
        float(np.linalg.norm(conj_transpose(xa) - xa)),
    )


def hs_decompose(a, tol: Tolerance = DEFAULT_TOL) -> HSDecomposition:
    """Hartwig-Spindelböck decomposition of a square matrix of positive rank.

    ``u`` holds the left singular vectors. With ``a = u diag(s, 0) v^*`` one
    has ``u^* a u = [[s (v^* u)_top], [0]]``, so ``[k l]`` is the first ``r``
    rows of the unitary ``v^* u`` and ``k k^* + l l^* = I_r`` automatically.
    """
    a = as_matrix(a, "a")
    n, n2 = a.shape
    if n != n2:
        raise ShapeError(f"hs_decompose needs a square matrix, got {a.shape}")
    f = svd(a, tol)
    r = f.rank
    if r == 0:
        raise DomainError("rank zero has no HS form with r>0")
    w = conj_transpose(f.v) @ f.u
    return HSDecomposition(
        u=f.u,
        sigma_block=np.diag(f.sigma[:r]).astype(np.complex128),
        k=np.ascontiguousarray(w[:r, :r]),
        l=np.ascontiguousarray(w[:r, r:]),
        r=r,
    )
