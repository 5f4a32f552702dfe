"""Predicates for the matrix classes around relative EP matrices.

Every predicate returns a :class:`~tepkit.matrix.Verdict`, so callers can
tell a confident answer from one sitting on the tolerance boundary.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .decompositions import pinv
from .errors import DomainError, PreconditionError, ShapeError, TepkitError, UsageError
from .matrix import (
    DEFAULT_TOL,
    Tolerance,
    Verdict,
    all_of,
    as_matrix,
    compare,
    conj_transpose as ct,
    identity,
)
from .subspaces import (
    nullspace_contained_verdict,
    nullspaces_equal_verdict,
    range_contained_verdict,
    ranges_equal_verdict,
)

T_EP_ROUTES = (
    "DEF", "C2", "C3", "C4", "C5", "C6", "PINV",
    "EPPROD-AT*", "EPPROD-TA*", "EPPROD-TApinv",
)


def _square(a, name):
    # well-formed input outside the predicate's domain, not a parse error
    if a.shape[0] != a.shape[1]:
        raise DomainError(f"{name} must be square, got {a.shape}")


def is_partial_isometry(t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    t = as_matrix(t, "t")
    return compare(t, t @ ct(t) @ t, tol)


def is_hermitian(a, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    a = as_matrix(a, "a")
    _square(a, "a")
    return compare(a, ct(a), tol)


def is_normal(t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    t = as_matrix(t, "t")
    _square(t, "t")
    return compare(t @ ct(t), ct(t) @ t, tol)


def is_unitary(t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    t = as_matrix(t, "t")
    _square(t, "t")
    eye = identity(t.shape[0])
    return all_of(compare(ct(t) @ t, eye, tol), compare(t @ ct(t), eye, tol))


def is_orthogonal_projector(t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    t = as_matrix(t, "t")
    return all_of(is_hermitian(t, tol), compare(t @ t, t, tol))


def is_involutory_hermitian(t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    t = as_matrix(t, "t")
    return all_of(is_hermitian(t, tol), compare(t @ t, identity(t.shape[0]), tol))


def is_ep(a, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """``A A^+ = A^+ A``."""
    a = as_matrix(a, "a")
    _square(a, "a")
    ap = pinv(a, tol)
    return compare(a @ ap, ap @ a, tol)


def require_pair(a, t, tol):
    a = as_matrix(a, "a")
    t = as_matrix(t, "t")
    if a.shape != t.shape:
        raise ShapeError(f"A and T must have the same shape, got {a.shape} and {t.shape}")
    v = is_partial_isometry(t, tol)
    if not v.holds:
        raise PreconditionError(
            f"T is not a partial isometry (residual {v.residual:.3e})",
            {"partial_isometry": v.residual},
        )
    return a, t


def is_t_hermitian(a, t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """``A = T A^* T``."""
    a, t = require_pair(a, t, tol)
    return compare(a, t @ ct(a) @ t, tol)


def is_t_normal(a, t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """``A = T T^* A = A T^* T`` and ``A A^* T = T A^* A``."""
    a, t = require_pair(a, t, tol)
    return all_of(
        compare(a, t @ ct(t) @ a, tol),
        compare(a, a @ ct(t) @ t, tol),
        compare(a @ ct(a) @ t, t @ ct(a) @ a, tol),
    )


def right_absorbs(a, t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """``A = A T^* T``."""
    return compare(a, a @ ct(t) @ t, tol)


def left_absorbs(a, t, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """``A = T T^* A``."""
    return compare(a, t @ ct(t) @ a, tol)


def _route(via, a, t, tol):
    at, ta = a @ ct(t), t @ ct(a)
    if via == "DEF":
        return all_of(ranges_equal_verdict(a, ta @ t, tol), right_absorbs(a, t, tol))
    if via == "C2":
        return all_of(ranges_equal_verdict(a, ta @ t, tol), nullspace_contained_verdict(t, a, tol))
    if via == "C3":
        return all_of(
            nullspaces_equal_verdict(ct(a), ct(t) @ a @ ct(t), tol),
            range_contained_verdict(ct(a), ct(t), tol),
        )
    if via == "C4":
        return all_of(ranges_equal_verdict(a, ta, tol), nullspace_contained_verdict(t, a, tol))
    if via == "C5":
        return all_of(ranges_equal_verdict(a, ta, tol), right_absorbs(a, t, tol))
    if via == "C6":
        return all_of(
            nullspaces_equal_verdict(ct(a), at, tol),
            range_contained_verdict(ct(a), ct(t), tol),
        )
    if via == "PINV":
        ap = pinv(a, tol)
        return all_of(compare(t @ ap @ a, a @ ap @ t, tol), right_absorbs(a, t, tol))
    if via == "EPPROD-AT*":
        return all_of(is_ep(at, tol), right_absorbs(a, t, tol))
    if via == "EPPROD-TA*":
        return all_of(is_ep(ta, tol), right_absorbs(a, t, tol))
    if via == "EPPROD-TApinv":
        return all_of(is_ep(t @ pinv(a, tol), tol), right_absorbs(a, t, tol))
    raise UsageError(f"unknown characterization {via!r}; expected one of {', '.join(T_EP_ROUTES)}")


def is_t_ep(a, t, tol: Tolerance = DEFAULT_TOL, via: str = "DEF") -> Verdict:
    """Relative EP test through one of the equivalent characterizations.

    ``DEF`` is ``R(A) = R(T A^* T)`` and ``A = A T^* T``; ``C2``..``C6`` are
    the range/null-space reformulations, ``PINV`` is
    ``T A^+ A = A A^+ T`` with ``A = A T^* T`` and the ``EPPROD-*`` routes
    ask that ``A T^*``, ``T A^*`` or ``T A^+`` be EP.
    """
    if via not in T_EP_ROUTES:
        raise UsageError(f"unknown characterization {via!r}; expected one of {', '.join(T_EP_ROUTES)}")
    a, t = require_pair(a, t, tol)
    return _route(via, a, t, tol)


def t_ep_votes(a, t, tol: Tolerance = DEFAULT_TOL) -> dict[str, Verdict]:
    a, t = require_pair(a, t, tol)
    return {via: _route(via, a, t, tol) for via in T_EP_ROUTES}


@dataclass
class Outcome:
    holds: bool | None
    residual: float | None
    error: str | None = None
    via: dict[str, bool] = field(default_factory=dict)

    def to_dict(self):
        out = {"holds": self.holds, "residual": self.residual}
        if self.via:
            out["via"] = dict(self.via)
        if self.error is not None:
            out["error"] = self.error
        return out


@dataclass
class ClassificationReport:
    predicates: dict[str, Outcome]
    characterization_votes: dict[str, bool]
    inconsistent: bool

    def __getitem__(self, name):
        return self.predicates[name].holds

    def to_dict(self):
        out = {name: o.to_dict() for name, o in self.predicates.items()}
        out["characterization_votes"] = dict(self.characterization_votes)
        out["inconsistent"] = self.inconsistent
        return out


def _outcome(fn, *args):
    try:
        v = fn(*args)
    except TepkitError as exc:
        return Outcome(None, None, f"{exc.code}: {exc}")
    return Outcome(bool(v.holds), float(v.residual))


def classify(a, t, tol: Tolerance = DEFAULT_TOL) -> ClassificationReport:
    """Evaluate every predicate on ``(A, T)``; errors are recorded, not raised."""
    a = as_matrix(a, "a")
    t = as_matrix(t, "t")
    preds = {
        "partial_isometry": _outcome(is_partial_isometry, t, tol),
        "unitary": _outcome(is_unitary, t, tol),
        "orthogonal_projector": _outcome(is_orthogonal_projector, t, tol),
        "involutory_hermitian": _outcome(is_involutory_hermitian, t, tol),
        "normal": _outcome(is_normal, t, tol),
        "ep": _outcome(is_ep, a, tol),
        "t_hermitian": _outcome(is_t_hermitian, a, t, tol),
        "t_normal": _outcome(is_t_normal, a, t, tol),
    }
    votes: dict[str, bool] = {}
    try:
        verdicts = t_ep_votes(a, t, tol)
    except TepkitError as exc:
        preds["t_ep"] = Outcome(None, None, f"{exc.code}: {exc}")
    else:
        votes = {k: bool(v.holds) for k, v in verdicts.items()}
        d = verdicts["DEF"]
        preds["t_ep"] = Outcome(bool(d.holds), float(d.residual), via=dict(votes))

    inconsistent = len(set(votes.values())) > 1
    chain = [preds[k].holds for k in ("t_hermitian", "t_normal", "t_ep")]
    if chain[0] and chain[1] is False or chain[1] and chain[2] is False:
        inconsistent = True
    return ClassificationReport(preds, votes, inconsistent)

