"""Law registry, trial bookkeeping and reports."""
from __future__ import annotations

import zlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ..errors import TepkitError, UsageError
from ..matrix import DEFAULT_TOL, Tolerance, Verdict
from ..serialize import matrix_to_dict

MAX_ATTEMPTS = 25


class Regenerate(Exception):
    """The drawn instance does not meet the law's hypotheses; draw again."""


@dataclass
class TrialResult:
    ok: bool
    residual: float
    detail: dict = field(default_factory=dict)
    groups: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Law:
    id: str
    covers: tuple[str, ...]
    generator: str
    check: str
    run: Callable[["Trial"], TrialResult]
    negative: bool = False
    trials: int = 200


@dataclass
class LawReport:
    law_id: str
    negative: bool
    trials_run: int
    passes: int
    failures: list[dict]
    max_residual: float
    regenerated: int = 0
    agreement: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """Positive laws: no failures. Negative laws: at least one counterexample."""
        if self.negative:
            return any("error" not in f["residuals"] for f in self.failures)
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "law_id": self.law_id,
            "negative": self.negative,
            "ok": self.ok,
            "trials_run": self.trials_run,
            "passes": self.passes,
            "failures": self.failures,
            "max_residual": self.max_residual,
            "regenerated": self.regenerated,
            "agreement_groups": {k: list(v) for k, v in self.agreement.items()},
        }


class Trial:
    """Randomness and witnesses for one attempt at one trial.

    The stream depends only on ``(master seed, law id, trial, attempt)``,
    so reports do not depend on the order in which trials run.
    """

    def __init__(self, law_id: str, index: int, attempt: int, master_seed: int, tol: Tolerance):
        ss = np.random.SeedSequence([int(master_seed), zlib.crc32(law_id.encode()), index, attempt])
        self.seed_value = int(ss.generate_state(1, np.uint64)[0])
        self.rng = np.random.default_rng(ss)
        self.index = index
        self.attempt = attempt
        self.tol = tol
        self.witnesses: dict[str, np.ndarray] = {}

    def seed(self) -> int:
        return int(self.rng.integers(0, 2**63))

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return int(self.rng.integers(lo, hi + 1))

    def coin(self) -> bool:
        return bool(self.rng.integers(0, 2))

    def record(self, **mats):
        self.witnesses.update(mats)


class Checks:
    """Accumulates expectations and agreement groups for one trial."""

    def __init__(self, trial: Trial):
        self.trial = trial
        self.failed: dict[str, object] = {}
        self.groups: dict[str, tuple[str, ...]] = {}
        self.residual = 0.0

    def _seen(self, v: Verdict):
        if v.holds:
            self.residual = max(self.residual, float(v.residual))

    def expect(self, name: str, verdict: Verdict, expected: bool = True):
        self._seen(verdict)
        if bool(verdict.holds) != expected:
            self.failed[name] = {"holds": bool(verdict.holds), "residual": verdict.residual,
                                 "expected": expected}

    def expect_all(self, prefix: str, verdicts: dict, expected: bool = True):
        for name, v in verdicts.items():
            self.expect(f"{prefix}:{name}", v, expected)

    def agree(self, group: str, verdicts: dict, expected: bool | None = None):
        """Every verdict in the group must match (and match ``expected`` if given)."""
        self.groups[group] = tuple(verdicts)
        for v in verdicts.values():
            self._seen(v)
        values = {k: bool(v.holds) for k, v in verdicts.items()}
        target = set(values.values())
        if len(target) > 1 or (expected is not None and target != {expected}):
            self.failed[group] = {"votes": values, "expected": expected}

    def fact(self, name: str, ok: bool, **info):
        if not ok:
            self.failed[name] = info or False

    def result(self) -> TrialResult:
        return TrialResult(not self.failed, self.residual, dict(self.failed), dict(self.groups))


def require(*verdicts: Verdict):
    """Hypothesis gate: regenerate unless every verdict holds."""
    if not all(v.holds for v in verdicts):
        raise Regenerate


def require_confident(*verdicts: Verdict):
    """Regenerate instances whose verdicts sit within 10x of the tolerance."""
    if not all(v.confident for v in verdicts):
        raise Regenerate


REGISTRY: dict[str, Law] = {}


def law(id: str, covers, generator: str, check: str, negative: bool = False):
    def register(fn):
        if id in REGISTRY:
            raise ValueError(f"duplicate law id {id}")
        REGISTRY[id] = Law(id=id, covers=tuple(covers), generator=generator, check=check,
                           run=fn, negative=negative)
        return fn
    return register


def _witness_dump(witnesses):
    return {k: matrix_to_dict(v) for k, v in witnesses.items()}


def check_law(law_id: str, trials: int = 200, seed: int = 0, tol: Tolerance = DEFAULT_TOL) -> LawReport:
    """Run ``trials`` randomized trials of a registered law."""
    if law_id not in REGISTRY:
        raise UsageError(f"unknown law {law_id!r}")
    if trials < 1:
        raise UsageError("trials must be positive")
    spec = REGISTRY[law_id]
    passes, failures, worst, regenerated = 0, [], 0.0, 0
    agreement: dict[str, tuple[str, ...]] = {}
    for index in range(trials):
        outcome, tr = None, None
        for attempt in range(MAX_ATTEMPTS):
            tr = Trial(law_id, index, attempt, seed, tol)
            try:
                outcome = spec.run(tr)
            except Regenerate:
                regenerated += 1
                continue
            except TepkitError as exc:
                outcome = TrialResult(False, float("inf"), {"error": f"{exc.code}: {exc}"})
            break
        if outcome is None:
            outcome = TrialResult(False, float("inf"),
                                  {"error": f"no instance met the hypotheses in {MAX_ATTEMPTS} draws"})
        agreement.update(outcome.groups)
        if np.isfinite(outcome.residual):
            worst = max(worst, outcome.residual)
        if outcome.ok:
            passes += 1
        else:
            failures.append({
                "trial": index,
                "seed": tr.seed_value,
                "residuals": outcome.detail,
                "witnesses": _witness_dump(tr.witnesses),
            })
    return LawReport(spec.id, spec.negative, trials, passes, failures, worst, regenerated, agreement)
