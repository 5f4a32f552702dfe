"""Laws for square matrices and partial isometries with extra structure."""
from __future__ import annotations

import numpy as np

from ..classes import is_ep, is_t_ep, right_absorbs
from ..decompositions import pinv
from ..generators import random_nonsingular, random_partial_isometry, random_unitary
from ..matrix import all_of, block_diag, compare, conj_transpose as ct, zeros
from ..subspaces import nullspaces_equal_verdict, ranges_equal_verdict
from .base import Checks, law, require, require_confident
from .instances import eigen_frame, frame_ep, low_rank, shape, unit_phases


def _square(tr):
    return shape(tr, 2, square=True)[0]


@law("EP-AND-AAstar",
     covers=("EP with AA* T-EP implies T-EP", "AA+ may replace AA*"),
     generator="U diag(D,0) U* with T block diagonal in the same basis",
     check="A EP and AA* (or AA+) T-EP => A T-EP")
def _ep_and_aastar(tr):
    n = _square(tr)
    r = tr.integer(1, n)
    rng = np.random.default_rng(tr.seed())
    u = random_unitary(n, rng)
    a = u @ block_diag(random_nonsingular(r, rng), zeros(n - r, n - r)) @ ct(u)
    s4 = random_partial_isometry(n - r, n - r, tr.integer(0, n - r), rng)
    t = u @ block_diag(random_unitary(r, rng), s4) @ ct(u)
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    # AA+ is the projector onto the first r columns of U; build it exactly
    proj = u[:, :r] @ ct(u[:, :r])
    c.fact("AA+ projector", compare(a @ pinv(a, tol), proj, tol).holds)
    require(is_ep(a, tol), is_t_ep(a @ ct(a), t, tol), is_t_ep(proj, t, tol))
    c.expect("A T-EP", is_t_ep(a, t, tol))
    return c.result()


def _structured_or_generic(tr, n, t, structured):
    """``E T`` with ``E`` EP (structured) or a random matrix of random rank."""
    if structured:
        rng = np.random.default_rng(tr.seed())
        e = random_unitary(n, rng)
        r = tr.integer(0, n)
        e = e @ block_diag(random_nonsingular(r, rng), zeros(n - r, n - r)) @ ct(e)
        return e @ t
    return low_rank(tr.rng, n, n, tr.integer(0, n))


@law("T-UNITARY",
     covers=("unitary T: seven equivalent items", "pseudoinverses of AT, TA, TAT"),
     generator="unitary T; A = ET with E EP | random A",
     check="all seven items agree; T-EP gives (AT)+ = T*A+, (TA)+ = A+T*, (TAT)+ = T*A+T*")
def _t_unitary(tr):
    n = _square(tr)
    t = random_unitary(n, np.random.default_rng(tr.seed()))
    forward = tr.index % 2 == 0
    a = _structured_or_generic(tr, n, t, forward)
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    ap = pinv(a, tol)
    items = {
        "i": is_t_ep(a, t, tol),
        "ii": ranges_equal_verdict(a, t @ ct(a), tol),
        "iii": nullspaces_equal_verdict(ct(a), a @ ct(t), tol),
        "iv": is_ep(a @ ct(t), tol),
        "v": is_ep(t @ ct(a), tol),
        "vi": is_ep(t @ ap, tol),
        "vii": compare(t @ ap @ a, a @ ap @ t, tol),
    }
    if not forward:
        require_confident(*items.values())
    c.agree("seven items", items, True if forward else None)
    if items["i"].holds:
        th = ct(t)
        c.expect("(AT)+", compare(pinv(a @ t, tol), th @ ap, tol))
        c.expect("(TA)+", compare(pinv(t @ a, tol), ap @ th, tol))
        c.expect("(TAT)+", compare(pinv(t @ a @ t, tol), th @ ap @ th, tol))
    return c.result()


@law("T-INVOL-HERM",
     covers=("involutory hermitian T: thirteen equivalent items",),
     generator="T = W diag(+-1) W*; A = ET with E EP | random A",
     check="all thirteen items agree")
def _t_invol_herm(tr):
    n = _square(tr)
    signs = np.where(tr.rng.integers(0, 2, size=n) == 1, 1.0, -1.0)
    _, t = eigen_frame(tr, n, signs)
    forward = tr.index % 2 == 0
    a = _structured_or_generic(tr, n, t, forward)
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    ah, ap = ct(a), pinv(a, tol)
    items = {
        "i": is_t_ep(a, t, tol),
        "ii": ranges_equal_verdict(a, t @ ah, tol),
        "iii": nullspaces_equal_verdict(ah, a @ t, tol),
        "iv": is_ep(a @ t, tol),
        "v": is_ep(t @ ah, tol),
        "vi": is_ep(t @ ap, tol),
        "vii": compare(t @ ap @ a, a @ ap @ t, tol),
        "viii": ranges_equal_verdict(ah, t @ a, tol),
        "ix": nullspaces_equal_verdict(a, ah @ t, tol),
        "x": is_ep(ah @ t, tol),
        "xi": is_ep(t @ a, tol),
        "xii": is_ep(ap @ t, tol),
        "xiii": compare(ap @ a @ t, t @ a @ ap, tol),
    }
    if not forward:
        require_confident(*items.values())
    c.agree("thirteen items", items, True if forward else None)
    return c.result()


@law("T-PROJECTOR",
     covers=("orthogonal projector T: four equivalent items",
             "AT, TA, TAT are EP and T-EP"),
     generator="T = W diag(I_k,0) W*; A EP on R(T) | random A or AT",
     check="all four items agree; T-EP gives AT, TA, TAT EP and T-EP")
def _t_projector(tr):
    n = _square(tr)
    k = tr.integer(1, n)
    w, t = eigen_frame(tr, n, np.ones(k))
    forward = tr.index % 2 == 0
    if forward:
        a = frame_ep(tr, w, k, tr.integer(0, k)) @ t
    else:
        a = low_rank(tr.rng, n, n, tr.integer(0, n))
        if tr.coin():
            a = a @ t
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    fixed = compare(a, a @ t, tol)
    items = {
        "i": is_t_ep(a, t, tol),
        "ii": all_of(is_ep(a, tol), fixed),
        "iii": all_of(is_ep(ct(a), tol), fixed),
        "iv": all_of(is_ep(pinv(a, tol), tol), fixed),
    }
    if not forward:
        require_confident(*items.values())
    c.agree("four items", items, True if forward else None)
    if items["i"].holds:
        for name, x in (("AT", a @ t), ("TA", t @ a), ("TAT", t @ a @ t)):
            c.expect(f"{name} EP", is_ep(x, tol))
            c.expect(f"{name} T-EP", is_t_ep(x, t, tol))
    return c.result()


@law("T-NORMAL-PINV",
     covers=("normal partial isometry pseudoinverse formulas",
             "A+ = (TA)+ T = T (AT)+ for T-EP A"),
     generator="T = W diag(phases_k, 0) W*",
     check="A = TT*A => (TA)+ = A+T*; A = AT*T => (AT)+ = T*A+; T-EP => both formulas")
def _t_normal_pinv(tr):
    n = _square(tr)
    k = tr.integer(1, n)
    w, t = eigen_frame(tr, n, unit_phases(tr, k))
    tol = tr.tol
    th = ct(t)
    c = Checks(tr)
    m1 = low_rank(tr.rng, n, n, tr.integer(0, n))
    m2 = low_rank(tr.rng, n, n, tr.integer(0, n))
    a1 = t @ th @ m1
    a2 = m2 @ th @ t
    a = frame_ep(tr, w, k, tr.integer(0, k)) @ t
    tr.record(T=t, A1=a1, A2=a2, A=a)

    p1 = pinv(a1, tol)
    c.expect("(TA)+ = A+T*", compare(pinv(t @ a1, tol), p1 @ th, tol))
    c.expect("A+ = (TA)+T", compare(p1, pinv(t @ a1, tol) @ t, tol))
    p2 = pinv(a2, tol)
    c.expect("(AT)+ = T*A+", compare(pinv(a2 @ t, tol), th @ p2, tol))
    c.expect("A+ = T(AT)+", compare(p2, t @ pinv(a2 @ t, tol), tol))

    c.expect("T-EP", is_t_ep(a, t, tol))
    ap = pinv(a, tol)
    c.expect("T-EP: A+ = (TA)+T", compare(ap, pinv(t @ a, tol) @ t, tol))
    c.expect("T-EP: A+ = T(AT)+", compare(ap, t @ pinv(a @ t, tol), tol))
    return c.result()


@law("T-HERM-SQ",
     covers=("hermitian partial isometry: TA EP and A = AT^2 = T^2A",),
     generator="T = W diag(+-1_k, 0) W*; A = ET | generic",
     check="T-EP <=> TA EP and A = AT^2 = T^2A")
def _t_herm_sq(tr):
    n = _square(tr)
    k = tr.integer(1, n)
    signs = np.where(tr.rng.integers(0, 2, size=k) == 1, 1.0, -1.0)
    w, t = eigen_frame(tr, n, signs)
    t2 = t @ t
    forward = tr.index % 2 == 0
    if forward:
        a = frame_ep(tr, w, k, tr.integer(0, k)) @ t
    else:
        a = low_rank(tr.rng, n, n, tr.integer(0, n))
        if tr.coin():
            a = t2 @ a @ t2
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    items = {
        "T-EP": is_t_ep(a, t, tol),
        "TA EP, A=AT^2=T^2A": all_of(
            is_ep(t @ a, tol), compare(a, a @ t2, tol), compare(a, t2 @ a, tol)),
    }
    if not forward:
        require_confident(*items.values())
    c.agree("equivalence", items, True if forward else None)
    return c.result()


@law("COMMUTE",
     covers=("A commuting with T*: T-EP iff EP and A = AT*T",),
     generator="normal T with grouped eigenvalues; A block diagonal in its eigenbasis",
     check="AT* = T*A => (T-EP <=> A EP and A = AT*T)")
def _commute(tr):
    n = _square(tr)
    rng = np.random.default_rng(tr.seed())
    # split n into eigenvalue groups; the last group may carry eigenvalue 0
    cuts = sorted(tr.rng.choice(np.arange(1, n), size=tr.integer(0, n - 1), replace=False))
    sizes = np.diff([0, *cuts, n]).astype(int)
    zero_group = len(sizes) > 1 and tr.coin()
    lam, blocks = [], []
    for j, s in enumerate(sizes):
        last = j == len(sizes) - 1
        value = 0.0 if (last and zero_group) else np.exp(2j * np.pi * (j + tr.rng.uniform(0.1, 0.9)) / len(sizes))
        lam.extend([value] * s)
        if last and zero_group:
            blocks.append(zeros(s, s) if tr.coin() else low_rank(tr.rng, s, s, tr.integer(1, s)))
        elif tr.coin():
            u = random_unitary(s, rng)
            r = tr.integer(0, s)
            blocks.append(u @ block_diag(random_nonsingular(r, rng), zeros(s - r, s - r)) @ ct(u))
        else:
            blocks.append(low_rank(tr.rng, s, s, tr.integer(0, s)))
    w = random_unitary(n, rng)
    t = (w * np.array(lam, dtype=np.complex128)) @ ct(w)
    a = w @ block_diag(*blocks) @ ct(w)
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    require(compare(a @ ct(t), ct(t) @ a, tol))
    items = {
        "T-EP": is_t_ep(a, t, tol),
        "EP and A=AT*T": all_of(is_ep(a, tol), right_absorbs(a, t, tol)),
    }
    require_confident(*items.values())
    c.agree("equivalence", items)
    return c.result()
