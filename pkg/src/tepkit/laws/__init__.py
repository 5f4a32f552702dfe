"""Randomized, seeded checks of the results about relative EP matrices.

Each registered :class:`Law` draws instances that satisfy its hypotheses,
evaluates the conclusion with the library's own predicates and reports
residuals and counterexamples.
"""
from . import general, special, sums  # noqa: F401  (registration side effect)
from .base import REGISTRY, Law, LawReport, check_law

NEGATIVE_IDS = tuple(k for k, v in REGISTRY.items() if v.negative)
POSITIVE_IDS = tuple(k for k, v in REGISTRY.items() if not v.negative)


def run_all(trials: int = 200, seed: int = 0, tol=None) -> list[LawReport]:
    """Run every registered law; negative laws included."""
    kw = {} if tol is None else {"tol": tol}
    return [check_law(law_id, trials, seed, **kw) for law_id in REGISTRY]


__all__ = ["REGISTRY", "Law", "LawReport", "check_law", "run_all", "POSITIVE_IDS", "NEGATIVE_IDS"]
