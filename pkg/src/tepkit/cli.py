"""Command-line front end.

Every command writes one JSON document to stdout (or ``--output``). Expected
failures go to stderr as ``{"error": code, "message": ...}`` with exit status
1 (a law failed), 2 (usage or input) or 3 (domain or numerical).
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import __version__
from .canonical import tep_canonical_rect, tep_canonical_square
from .classes import classify
from .decompositions import penrose_residuals, pinv
from .errors import DomainError, InputError, NumericalError, TepkitError, UsageError
from .generators import KINDS, GenSpec, gen_named
from .laws import REGISTRY, check_law
from .matrix import DEFAULT_TOL, Tolerance
from .serialize import dumps, load_matrix

ENV_RTOL = "TEPKIT_TOL_RTOL"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_tol(p):
    g = p.add_argument_group("tolerance")
    g.add_argument("--tol-rank", type=float, metavar="X",
                   help="relative singular value cutoff (default: max(m, n) * eps)")
    g.add_argument("--tol-atol", type=float, metavar="X", help=f"absolute floor (default {DEFAULT_TOL.eq_atol})")
    g.add_argument("--tol-rtol", type=float, metavar="X",
                   help=f"relative factor (default {DEFAULT_TOL.eq_rtol}, or ${ENV_RTOL})")
    p.add_argument("--output", "-o", metavar="PATH", help="write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tepkit", description="Relative EP matrices: predicates, canonical forms, law checks.")
    parser.add_argument("--version", action="version", version=f"tepkit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("classify", help="evaluate every predicate on (A, T)")
    p.add_argument("a", metavar="A.json")
    p.add_argument("t", metavar="T.json")
    _add_tol(p)

    p = sub.add_parser("decompose", help="canonical form of a T-EP matrix")
    p.add_argument("a", metavar="A.json")
    p.add_argument("t", metavar="T.json")
    p.add_argument("--rect", action="store_true", help="use the SVD-based form even for square input")
    _add_tol(p)

    p = sub.add_parser("pinv", help="Moore-Penrose inverse with Penrose residuals")
    p.add_argument("a", metavar="A.json")
    _add_tol(p)

    p = sub.add_parser("generate", help="seeded structured witnesses")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int)
    p.add_argument("--rank", type=int)
    p.add_argument("--rank-b", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--condition-cap", type=float, default=100.0)
    p.add_argument("--output", "-o", metavar="PATH", help="write JSON here instead of stdout")

    p = sub.add_parser("verify", help="randomized law checks")
    p.add_argument("--law", required=True, metavar="ID", help="law id or 'all'")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    _add_tol(p)
    return parser


def _tolerance(args) -> Tolerance:
    rtol = args.tol_rtol
    if rtol is None and os.environ.get(ENV_RTOL):
        raw = os.environ[ENV_RTOL]
        try:
            rtol = float(raw)
        except ValueError:
            raise InputError(f"{ENV_RTOL}: not a number: {raw!r}") from None
    return Tolerance(
        rank_rtol=args.tol_rank,
        eq_atol=DEFAULT_TOL.eq_atol if args.tol_atol is None else args.tol_atol,
        eq_rtol=DEFAULT_TOL.eq_rtol if rtol is None else rtol,
    )


def _verdicts(d):
    return {k: {"holds": bool(v.holds), "residual": float(v.residual)} for k, v in d.items()}


def _classify(args):
    return classify(load_matrix(args.a), load_matrix(args.t), _tolerance(args)).to_dict(), 0


def _decompose(args):
    tol = _tolerance(args)
    a, t = load_matrix(args.a), load_matrix(args.t)
    square = a.shape[0] == a.shape[1] and not args.rect
    form = (tep_canonical_square if square else tep_canonical_rect)(a, t, tol)
    out = {"kind": form.kind, "rank": form.rank, "U": form.u, "D": form.d}
    if form.v is not None:
        out["V"] = form.v
    out.update({"T1": form.t1, "T2": form.t2, "T3": form.t3, "T4": form.t4,
                "E": form.ep_factor, "residuals": _verdicts(form.residuals(a, t, tol))})
    return out, 0


def _pinv(args):
    tol = _tolerance(args)
    a = load_matrix(args.a)
    x = pinv(a, tol)
    names = ("AXA=A", "XAX=X", "(AX)*=AX", "(XA)*=XA")
    return {"pinv": x, "penrose_residuals": dict(zip(names, penrose_residuals(a, x)))}, 0


def _generate(args):
    spec = GenSpec(args.kind, args.rows, args.cols, args.rank, args.seed,
                   args.condition_cap, args.rank_b)
    out = gen_named(spec)
    if len(out) == 1:
        return next(iter(out.values())), 0
    return out, 0


def _verify(args):
    tol = _tolerance(args)
    if args.law != "all" and args.law not in REGISTRY:
        raise UsageError(f"--law: unknown law {args.law!r}; expected 'all' or one of {', '.join(REGISTRY)}")
    ids = list(REGISTRY) if args.law == "all" else [args.law]
    reports = [check_law(i, args.trials, args.seed, tol) for i in ids]
    ok = all(r.ok for r in reports)
    if args.law == "all":
        out = {"ok": ok, "trials": args.trials, "seed": args.seed,
               "reports": [r.to_dict() for r in reports]}
    else:
        out = reports[0].to_dict()
    return out, 0 if ok else 1


_COMMANDS = {
    "classify": _classify,
    "decompose": _decompose,
    "pinv": _pinv,
    "generate": _generate,
    "verify": _verify,
}


def _error_doc(exc: TepkitError) -> dict:
    doc = {"error": exc.code, "message": str(exc)}
    if isinstance(exc, DomainError) and exc.residuals:
        doc["residuals"] = exc.residuals
    if isinstance(exc, NumericalError) and exc.iterations is not None:
        doc["iterations"] = exc.iterations
    return doc


def run(argv=None, stdout=None, stderr=None) -> int:
    """Execute one command and return its exit status."""
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    try:
        args = build_parser().parse_args(argv)
        out, status = _COMMANDS[args.command](args)
        text = dumps(out)
        if args.output:
            try:
                Path(args.output).write_text(text)
            except OSError as exc:
                raise InputError(f"--output: cannot write {args.output} ({exc.strerror})") from exc
        else:
            stdout.write(text)
        return status
    except TepkitError as exc:
        stderr.write(dumps(_error_doc(exc)))
        return exc.exit_code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
