"""Seeded constructors for structured test matrices.

Each sub-draw gets its own stream ``SeedSequence(seed, spawn_key=(k,))`` so
adding a draw to one construction never shifts the numbers of another.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import UsageError
from .matrix import block_diag, conj_transpose as ct, zeros

KINDS = (
    "unitary",
    "partial_isometry",
    "normal_partial_isometry",
    "hermitian_partial_isometry",
    "orthogonal_projector",
    "involutory_hermitian",
    "ep",
    "t_ep",
    "t_hermitian",
    "star_orthogonal_pair",
)

WITNESS_NAMES = {
    "unitary": ("Q",),
    "partial_isometry": ("T",),
    "normal_partial_isometry": ("T",),
    "hermitian_partial_isometry": ("T",),
    "orthogonal_projector": ("P",),
    "involutory_hermitian": ("T",),
    "ep": ("A",),
    "t_ep": ("A", "T"),
    "t_hermitian": ("A", "T"),
    "star_orthogonal_pair": ("A", "B", "T"),
}

_SQUARE = {
    "unitary", "normal_partial_isometry", "hermitian_partial_isometry",
    "orthogonal_projector", "involutory_hermitian", "ep",
}


@dataclass(frozen=True)
class GenSpec:
    """What to generate.

    ``rank`` is the rank of the primary output (of ``A`` for the ``t_ep``
    and pair kinds, of ``T`` for ``t_hermitian``); ``None`` means full.
    ``rank_b`` is the rank of ``B`` in a star-orthogonal pair.
    """

    kind: str
    rows: int
    cols: int | None = None
    rank: int | None = None
    seed: int = 0
    condition_cap: float = 100.0
    rank_b: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UsageError(f"unknown kind {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.cols is None:
            object.__setattr__(self, "cols", self.rows)
        if self.rows < 1 or self.cols < 1:
            raise UsageError(f"dimensions must be positive, got {self.rows}x{self.cols}")
        full = min(self.rows, self.cols)
        if self.rank is None:
            object.__setattr__(self, "rank", full)
        if not 0 <= self.rank <= full:
            raise UsageError(f"rank {self.rank} infeasible for {self.rows}x{self.cols}")
        if self.kind in _SQUARE and self.rows != self.cols:
            raise UsageError(f"{self.kind} needs a square shape, got {self.rows}x{self.cols}")
        if self.kind in ("unitary", "involutory_hermitian") and self.rank != self.rows:
            raise UsageError(f"{self.kind} needs rank equal to the dimension")
        if self.kind == "star_orthogonal_pair":
            if self.rank_b is None:
                object.__setattr__(self, "rank_b", self.rank)
            if self.rank_b < 0 or self.rank + self.rank_b > full:
                raise UsageError(f"ranks {self.rank}+{self.rank_b} exceed {full}")
        if not self.condition_cap >= 1.0:
            raise UsageError(f"condition_cap must be >= 1, got {self.condition_cap}")
        if not 0 <= self.seed < 2**64:
            raise UsageError("seed must be a 64-bit unsigned integer")


class Streams:
    """Independent generators ``0, 1, 2, ...`` derived from one seed."""

    def __init__(self, seed: int):
        self.seed = int(seed)
        self.count = 0

    def next(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.seed, spawn_key=(self.count,))
        self.count += 1
        return np.random.default_rng(ss)


def complex_gaussian(rng, rows, cols) -> np.ndarray:
    return (rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))) / np.sqrt(2)


def random_unitary(n: int, rng) -> np.ndarray:
    """Haar unitary: QR of a complex Gaussian with the phases of ``diag(R)`` removed."""
    if n == 0:
        return zeros(0, 0)
    q, r = np.linalg.qr(complex_gaussian(rng, n, n))
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_partial_isometry(rows: int, cols: int, rank: int, rng) -> np.ndarray:
    """``W diag(I_rank, 0) V^*`` with Haar ``W``, ``V``."""
    if rank == 0 or rows == 0 or cols == 0:
        return zeros(rows, cols)
    w = random_unitary(rows, rng)
    v = random_unitary(cols, rng)
    return w[:, :rank] @ ct(v[:, :rank])


def random_nonsingular(r: int, rng, condition_cap: float = 100.0) -> np.ndarray:
    """``Q diag(s)`` with ``s`` log-uniform in ``[cap^-1/2, cap^1/2]``."""
    if r == 0:
        return zeros(0, 0)
    half = 0.5 * np.log(condition_cap)
    s = np.exp(rng.uniform(-half, half, size=r))
    return random_unitary(r, rng) * s


def random_ep(n: int, r: int, rng, condition_cap: float = 100.0) -> np.ndarray:
    """``U diag(D, 0) U^*`` with ``D`` nonsingular."""
    u = random_unitary(n, rng)
    return u @ block_diag(random_nonsingular(r, rng, condition_cap), zeros(n - r, n - r)) @ ct(u)


def random_unit_phases(k: int, rng) -> np.ndarray:
    return np.exp(2j * np.pi * rng.uniform(size=k))


def _t_ep(spec, s):
    m, n, r = spec.rows, spec.cols, spec.rank
    u = random_unitary(m, s.next())
    v = random_unitary(n, s.next())
    t1 = random_unitary(r, s.next())
    rng = s.next()
    k4 = int(rng.integers(0, min(m - r, n - r) + 1))
    t4 = random_partial_isometry(m - r, n - r, k4, s.next())
    t = u @ block_diag(t1, t4) @ ct(v)
    d = random_nonsingular(r, s.next(), spec.condition_cap)
    a = u @ block_diag(d, zeros(m - r, m - r)) @ ct(u) @ t
    return a, t


def _t_hermitian(spec, s):
    m, n, k = spec.rows, spec.cols, spec.rank
    rng = s.next()
    w = random_unitary(m, rng)[:, :k]
    v = random_unitary(n, rng)[:, :k]
    t = w @ ct(v)
    # with T = W V^*, every T-hermitian A is W H V^* for a hermitian H
    g = complex_gaussian(s.next(), k, k)
    a = w @ (0.5 * (g + ct(g))) @ ct(v)
    return a, t


def _star_orthogonal_pair(spec, s):
    m, n, ra, rb = spec.rows, spec.cols, spec.rank, spec.rank_b
    u = random_unitary(m, s.next())
    v = random_unitary(n, s.next())
    ta = random_unitary(ra, s.next())
    tb = random_unitary(rb, s.next())
    rest_m, rest_n = m - ra - rb, n - ra - rb
    rng = s.next()
    k4 = int(rng.integers(0, min(rest_m, rest_n) + 1))
    t4 = random_partial_isometry(rest_m, rest_n, k4, s.next())
    t = u @ block_diag(ta, tb, t4) @ ct(v)
    da = random_nonsingular(ra, s.next(), spec.condition_cap)
    db = random_nonsingular(rb, s.next(), spec.condition_cap)
    za, zb, zr = zeros(ra, ra), zeros(rb, rb), zeros(rest_m, rest_m)
    a = u @ block_diag(da, zb, zr) @ ct(u) @ t
    b = u @ block_diag(za, db, zr) @ ct(u) @ t
    return a, b, t


def gen(spec: GenSpec):
    """Generate the witness described by ``spec``.

    Returns one matrix, or a tuple ordered as ``WITNESS_NAMES[spec.kind]``.
    """
    s = Streams(spec.seed)
    n, r = spec.rows, spec.rank
    kind = spec.kind
    if kind == "unitary":
        return random_unitary(n, s.next())
    if kind == "partial_isometry":
        return random_partial_isometry(spec.rows, spec.cols, r, s.next())
    if kind in ("normal_partial_isometry", "hermitian_partial_isometry",
                "orthogonal_projector", "involutory_hermitian"):
        w = random_unitary(n, s.next())
        rng = s.next()
        if kind == "normal_partial_isometry":
            core = random_unit_phases(r, rng)
        elif kind == "orthogonal_projector":
            core = np.ones(r)
        else:
            core = rng.choice([-1.0, 1.0], size=r)
        lam = np.concatenate([core, np.zeros(n - r)]).astype(np.complex128)
        return (w * lam) @ ct(w)
    if kind == "ep":
        return random_ep(n, r, s.next(), spec.condition_cap)
    if kind == "t_ep":
        return _t_ep(spec, s)
    if kind == "t_hermitian":
        return _t_hermitian(spec, s)
    return _star_orthogonal_pair(spec, s)


def gen_named(spec: GenSpec) -> dict[str, np.ndarray]:
    out = gen(spec)
    if not isinstance(out, tuple):
        out = (out,)
    return dict(zip(WITNESS_NAMES[spec.kind], out))
