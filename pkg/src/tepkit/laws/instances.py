"""Instance builders shared by the law checks.

Forward instances satisfy a law's hypotheses by construction; generic
instances are drawn so that verdicts come out both ways.
"""
from __future__ import annotations

import numpy as np

from ..generators import (
    GenSpec,
    complex_gaussian,
    gen,
    random_nonsingular,
    random_partial_isometry,
    random_unit_phases,
    random_unitary,
)
from ..matrix import block_diag, conj_transpose as ct, zeros

MAX_DIM = 7


def shape(tr, lo: int = 1, hi: int = MAX_DIM, square: bool = False):
    m = tr.integer(lo, hi)
    return (m, m) if square else (m, tr.integer(lo, hi))


def low_rank(rng, m: int, n: int, r: int) -> np.ndarray:
    if r == 0:
        return zeros(m, n)
    return complex_gaussian(rng, m, r) @ complex_gaussian(rng, r, n)


def orthonormal(x: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the column space of a full column rank ``x``."""
    if x.shape[1] == 0:
        return x
    return np.linalg.qr(x)[0]


def ep_on(basis: np.ndarray, rng, cap: float = 100.0) -> np.ndarray:
    """EP matrix ``Y C Y^*`` whose range is spanned by the orthonormal ``basis``."""
    r = basis.shape[1]
    if r == 0:
        return zeros(basis.shape[0], basis.shape[0])
    return basis @ random_nonsingular(r, rng, cap) @ ct(basis)


def t_ep_pair(tr, m: int, n: int, r: int):
    return gen(GenSpec("t_ep", m, n, r, seed=tr.seed()))


def partial_isometry(tr, m: int, n: int, k: int) -> np.ndarray:
    return random_partial_isometry(m, n, k, np.random.default_rng(tr.seed()))


def range_basis(t: np.ndarray, k: int, rng) -> np.ndarray:
    """Random orthonormal basis of ``R(t)`` for a partial isometry of rank ``k``."""
    x = t @ complex_gaussian(rng, t.shape[1], k)
    return orthonormal(x)


def generic_pair(tr, m: int, n: int):
    """A partial isometry ``T`` and an ``A`` from one of three families.

    ``free``: unrelated ``A``; ``right``: ``A = M T^* T``; ``both``:
    ``A = T T^* M T^* T``. The last two satisfy one or both absorption
    identities, so only the range condition decides relative EP-ness.
    """
    rng = np.random.default_rng(tr.seed())
    k = tr.integer(0, min(m, n))
    t = random_partial_isometry(m, n, k, rng)
    family = ("free", "right", "both")[tr.integer(0, 2)]
    r = tr.integer(0, min(m, n))
    a = low_rank(rng, m, n, r)
    if family == "right":
        a = a @ ct(t) @ t
    elif family == "both":
        a = t @ ct(t) @ a @ ct(t) @ t
    return a, t, family


def eigen_frame(tr, n: int, core: np.ndarray):
    """``(W, W diag(core, 0) W^*)`` for a Haar unitary ``W``."""
    w = random_unitary(n, np.random.default_rng(tr.seed()))
    lam = np.concatenate([core, np.zeros(n - len(core))]).astype(np.complex128)
    return w, (w * lam) @ ct(w)


def unit_phases(tr, k: int) -> np.ndarray:
    return random_unit_phases(k, np.random.default_rng(tr.seed()))


def frame_ep(tr, w: np.ndarray, k: int, r: int) -> np.ndarray:
    """EP matrix of rank ``r`` living on the first ``k`` columns of ``w``."""
    rng = np.random.default_rng(tr.seed())
    n = w.shape[0]
    inner = random_unitary(k, rng)
    core = block_diag(random_nonsingular(r, rng), zeros(k - r, k - r))
    core = inner @ core @ ct(inner)
    return w @ block_diag(core, zeros(n - k, n - k)) @ ct(w)
