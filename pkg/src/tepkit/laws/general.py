"""Laws about relative EP matrices for an arbitrary partial isometry."""
from __future__ import annotations

import numpy as np

from .. import fixtures
from ..canonical import pinv_identities, pinv_via_factor, tep_canonical_rect, tep_canonical_square
from ..classes import (
    is_ep,
    is_partial_isometry,
    is_t_ep,
    is_t_hermitian,
    is_t_normal,
    left_absorbs,
    right_absorbs,
    t_ep_votes,
)
from ..decompositions import hs_decompose, pinv, rank_of
from ..errors import DomainError
from ..generators import GenSpec, complex_gaussian, gen, random_ep, random_partial_isometry
from ..matrix import all_of, block_diag, compare, conj_transpose as ct, identity
from ..subspaces import (
    nullspace_contained_verdict,
    range_contained_verdict,
)
from .base import Checks, TrialResult, law, require, require_confident
from .instances import ep_on, generic_pair, low_rank, range_basis, shape, t_ep_pair


def _mixed(tr, square=False):
    """T-EP pair on even trials, a generic pair on odd ones."""
    m, n = shape(tr, 2 if square else 1, square=square)
    if tr.index % 2 == 0:
        r = tr.integer(0, min(m, n))
        a, t = t_ep_pair(tr, m, n, r)
        return a, t, True
    a, t, _ = generic_pair(tr, m, n)
    return a, t, None


@law("TH-implies-TN",
     covers=("T-hermitian implies T-normal", "T-normal implies T-EP",
             "worked example E1", "worked example E2"),
     generator="t_hermitian",
     check="is_t_hermitian => is_t_normal => is_t_ep")
def _th_implies_tn(tr):
    c = Checks(tr)
    if tr.index == 0:
        a, t = fixtures.E2_A, fixtures.E2_T
        c.expect("E2 not EP", is_ep(a, tr.tol), expected=False)
    elif tr.index % 10 == 1:
        # the general T-hermitian matrix for the E1 partial isometry
        a_, b_ = tr.rng.standard_normal(2)
        z = complex_gaussian(tr.rng, 1, 1)[0, 0]
        t = fixtures.E1_T
        a = np.array([[0, a_, z], [0, 0, 0], [0, np.conj(z), b_]], dtype=np.complex128)
        c.expect("E1 not hermitian", compare(a, ct(a), tr.tol), expected=False)
        c.expect("E1 not EP", is_ep(a, tr.tol), expected=False)
    else:
        m, n = shape(tr)
        a, t = gen(GenSpec("t_hermitian", m, n, tr.integer(0, min(m, n)), seed=tr.seed()))
    tr.record(A=a, T=t)
    th = is_t_hermitian(a, t, tr.tol)
    require(th)
    c.expect("t_normal", is_t_normal(a, t, tr.tol))
    c.expect("t_ep", is_t_ep(a, t, tr.tol))
    # a unimodular multiple is T-normal but not T-hermitian
    phase = np.exp(1j * tr.rng.uniform(0.1, 2 * np.pi - 0.1))
    b = phase * a
    tr.record(B=b)
    tn = is_t_normal(b, t, tr.tol)
    require(tn)
    c.expect("rotated t_ep", is_t_ep(b, t, tr.tol))
    return c.result()


@law("CHAR6",
     covers=("range inclusion equivalences", "null space inclusion equivalences",
             "six-way characterization", "T-EP gives A = TT*A and equal ranks"),
     generator="t_ep | generic pair",
     check="routes DEF, C2..C6 agree; inclusion items agree; T-EP gives A=TT*A and equal ranks")
def _char6(tr):
    a, t, expected = _mixed(tr)
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    votes = t_ep_votes(a, t, tol)
    six = {k: votes[k] for k in ("DEF", "C2", "C3", "C4", "C5", "C6")}
    ap = pinv(a, tol)
    left_items = {
        "A=TT*A": left_absorbs(a, t, tol),
        "R(A)<R(T)": range_contained_verdict(a, t, tol),
        "N(T*)<N(A*)": nullspace_contained_verdict(ct(t), ct(a), tol),
        "A+=A+TT*": compare(ap, ap @ t @ ct(t), tol),
    }
    right_items = {
        "A=AT*T": right_absorbs(a, t, tol),
        "N(T)<N(A)": nullspace_contained_verdict(t, a, tol),
        "R(A*)<R(T*)": range_contained_verdict(ct(a), ct(t), tol),
        "A+=T*TA+": compare(ap, ct(t) @ t @ ap, tol),
    }
    if expected is None:
        require_confident(*six.values(), *left_items.values(), *right_items.values())
    c.agree("six-way", six, expected)
    c.agree("range inclusion", left_items)
    c.agree("null space inclusion", right_items)
    if six["DEF"].holds:
        c.expect("A=TT*A", left_items["A=TT*A"])
        ranks = {rank_of(x, tol) for x in (a, t @ ct(a) @ t, t @ ct(a), ct(a) @ t)}
        c.fact("equal ranks", len(ranks) == 1, ranks=sorted(ranks))
    return c.result()


@law("PINV-CHAR",
     covers=("pseudoinverse commutation characterization",
             "commutation plus any null space inclusion item"),
     generator="t_ep | generic pair",
     check="TA+A = AA+T with A = AT*T agrees with the definition and its inclusion variants")
def _pinv_char(tr):
    a, t, expected = _mixed(tr)
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    ap = pinv(a, tol)
    comm = compare(t @ ap @ a, a @ ap @ t, tol)
    items = {
        "DEF": is_t_ep(a, t, tol),
        "PINV": is_t_ep(a, t, tol, via="PINV"),
        "comm & N(T)<N(A)": all_of(comm, nullspace_contained_verdict(t, a, tol)),
        "comm & R(A*)<R(T*)": all_of(comm, range_contained_verdict(ct(a), ct(t), tol)),
        "comm & A+=T*TA+": all_of(comm, compare(ap, ct(t) @ t @ ap, tol)),
    }
    if expected is None:
        require_confident(*items.values(), comm)
    c.agree("pinv characterization", items, expected)
    return c.result()


@law("DUALITY",
     covers=("adjoint and pseudoinverse duality", "T-EP passes to adjoint and pseudoinverse",
             "pseudoinverse product identities"),
     generator="t_ep | generic pair",
     check="A T-EP <=> A* T*-EP <=> A+ T*-EP; nine product identities on T-EP pairs")
def _duality(tr):
    a, t, expected = _mixed(tr)
    tr.record(A=a, T=t)
    tol = tr.tol
    c = Checks(tr)
    items = {
        "A wrt T": is_t_ep(a, t, tol),
        "A* wrt T*": is_t_ep(ct(a), ct(t), tol),
        "A+ wrt T*": is_t_ep(pinv(a, tol), ct(t), tol),
    }
    if expected is None:
        require_confident(*items.values())
    c.agree("duality", items, expected)
    if items["A wrt T"].holds:
        c.expect_all("identity", pinv_identities(a, t, tol))
    return c.result()


@law("EPPROD",
     covers=("EP product characterizations",),
     generator="t_ep | generic pair",
     check="AT*, TA*, TA+ EP (with A = AT*T) agree with the definition")
def _epprod(tr):
    a, t, expected = _mixed(tr)
    tr.record(A=a, T=t)
    c = Checks(tr)
    votes = t_ep_votes(a, t, tr.tol)
    items = {k: votes[k] for k in ("DEF", "EPPROD-AT*", "EPPROD-TA*", "EPPROD-TApinv")}
    if expected is None:
        require_confident(*items.values())
    c.agree("EP products", items, expected)
    return c.result()


def _reverse_pair(tr, m, n):
    """``A = E T`` with ``E`` EP and ``R(E)`` inside ``R(T)``."""
    rng = np.random.default_rng(tr.seed())
    k = tr.integer(1, min(m, n))
    t = random_partial_isometry(m, n, k, rng)
    r = tr.integer(1, k)
    e = ep_on(range_basis(t, k, rng)[:, :r], rng)
    return e @ t, t, e


def _canonical_common(c, tr, a, t, form):
    tol = tr.tol
    c.expect_all("form", form.residuals(a, t, tol))
    ap = pinv(a, tol)
    c.expect("A+ = T* U diag(D^-1,0) U*", compare(ap, form.pinv(t), tol))
    c.expect("A+ = T* E+", compare(ap, pinv_via_factor(a, t, tol), tol))
    c.fact("rank", form.rank == rank_of(a, tol), rank=form.rank)


@law("CANON-RECT",
     covers=("rectangular canonical form", "E T T* = E",
             "A+ = T* E+", "explicit pseudoinverse through D", "T*A = R diag(D,0) R*"),
     generator="t_ep | E T with EP E on R(T)",
     check="T-EP <=> A = U diag(D,0) U* T with block-diagonal T <=> A = ET, TT*E = E")
def _canon_rect(tr):
    m, n = shape(tr)
    tol = tr.tol
    c = Checks(tr)
    if tr.index % 2 == 0:
        a, t = t_ep_pair(tr, m, n, tr.integer(1, min(m, n)))
        tr.record(A=a, T=t)
    else:
        a, t, e = _reverse_pair(tr, m, n)
        tr.record(A=a, T=t, E=e)
        c.expect("ET is T-EP", is_t_ep(a, t, tol))
    form = tep_canonical_rect(a, t, tol)
    _canonical_common(c, tr, a, t, form)
    r = form.rank
    R = ct(t) @ form.u
    c.expect("R partial isometry", is_partial_isometry(R, tol))
    c.expect("T*A = R diag(D,0) R*",
             compare(ct(t) @ a, R @ form.core() @ ct(R), tol))
    c.fact("T1 square", form.t1.shape == (r, r))
    return c.result()


@law("CANON-SQ",
     covers=("Hartwig-Spindelbock decomposition", "Hartwig-Spindelbock pseudoinverse",
             "square canonical form", "U*TT*U = diag(I, Z)"),
     generator="square t_ep | E T with EP E on R(T)",
     check="T-EP <=> A = U diag(D,0) U* T with T1T1*+T2T2* = I, T3T1*+T4T2* = 0 <=> A = CT")
def _canon_sq(tr):
    n, _ = shape(tr, 2, square=True)
    tol = tr.tol
    c = Checks(tr)
    if tr.index % 2 == 0:
        a, t = t_ep_pair(tr, n, n, tr.integer(1, n))
        tr.record(A=a, T=t)
    else:
        a, t, e = _reverse_pair(tr, n, n)
        tr.record(A=a, T=t, E=e)
        c.expect("CT is T-EP", is_t_ep(a, t, tol))
    form = tep_canonical_square(a, t, tol)
    _canonical_common(c, tr, a, t, form)
    r = form.rank
    z = form.t3 @ ct(form.t3) + form.t4 @ ct(form.t4)
    c.expect("U*TT*U = diag(I,Z)",
             compare(ct(form.u) @ t @ ct(t) @ form.u, block_diag(identity(r), z), tol))
    c.expect("Z hermitian", compare(z, ct(z), tol))

    # the decomposition itself, on an unrelated square matrix
    g = low_rank(tr.rng, n, n, tr.integer(1, n))
    hs = hs_decompose(g, tol)
    k, l_ = hs.k, hs.l
    c.expect("HS reconstruct", compare(g, hs.reconstruct(), tol))
    c.expect("KK*+LL*=I", compare(k @ ct(k) + l_ @ ct(l_), identity(hs.r), tol))
    c.expect("HS pinv", compare(pinv(g, tol), hs.pinv(), tol))
    c.expect("HS AA+", compare(g @ pinv(g, tol), hs.range_projector(), tol))
    return c.result()


@law("PEARL",
     covers=("EP iff unitarily similar to diag(D,0)",),
     generator="ep | generic square",
     check="with T = I: A EP <=> A = U diag(D,0) U*")
def _pearl(tr):
    n, _ = shape(tr, 2, square=True)
    tol = tr.tol
    eye = identity(n)
    c = Checks(tr)
    if tr.index % 2 == 0:
        a = random_ep(n, tr.integer(1, n), np.random.default_rng(tr.seed()))
        tr.record(A=a)
        c.expect("EP", is_ep(a, tol))
    else:
        a = low_rank(tr.rng, n, n, tr.integer(1, n))
        tr.record(A=a)
        require_confident(is_ep(a, tol))
    ep = is_ep(a, tol)
    c.agree("EP = I-EP", {"EP": ep, "I-EP": is_t_ep(a, eye, tol)})
    if ep.holds:
        for build in (tep_canonical_rect, tep_canonical_square):
            form = build(a, eye, tol)
            c.expect(f"{form.kind} U diag(D,0) U*",
                     compare(a, form.u @ form.core() @ ct(form.u), tol))
            c.expect(f"{form.kind} D nonsingular", form.residuals(a, eye, tol)["d_nonsingular"])
    else:
        try:
            tep_canonical_rect(a, eye, tol)
        except DomainError:
            pass
        else:
            c.fact("non-EP has no form", False)
    return c.result()


@law("TEP-implies-TN-FALSE",
     covers=("worked example E3",),
     generator="t_ep",
     check="counterexample search: T-EP but not T-normal",
     negative=True)
def _tep_not_tn(tr):
    if tr.index == 0:
        a, t = fixtures.E3_A, fixtures.E3_T
    else:
        m, n = shape(tr)
        a, t = t_ep_pair(tr, m, n, tr.integer(1, min(m, n)))
    tr.record(A=a, T=t)
    tep, tn = is_t_ep(a, t, tr.tol), is_t_normal(a, t, tr.tol)
    return TrialResult(not (tep.holds and not tn.holds), tn.residual,
                       {"t_ep": bool(tep.holds), "t_normal": bool(tn.holds)})


@law("TEP-implies-EP-FALSE",
     covers=("worked example E2",),
     generator="square t_ep",
     check="counterexample search: T-EP but not EP",
     negative=True)
def _tep_not_ep(tr):
    if tr.index == 0:
        a, t = fixtures.E2_A, fixtures.E2_T
    else:
        n, _ = shape(tr, 2, square=True)
        a, t = t_ep_pair(tr, n, n, tr.integer(1, n))
    tr.record(A=a, T=t)
    tep, ep = is_t_ep(a, t, tr.tol), is_ep(a, tr.tol)
    return TrialResult(not (tep.holds and not ep.holds), ep.residual,
                       {"t_ep": bool(tep.holds), "ep": bool(ep.holds)})

