"""Relative EP (T-EP) matrices: predicates, canonical forms, pseudoinverse
formulas, structured generators and a randomized law registry."""

from .canonical import (
    TepCanonical,
    ep_factor,
    pinv_identities,
    pinv_via_factor,
    tep_canonical_rect,
    tep_canonical_square,
)
from .classes import (
    T_EP_ROUTES,
    ClassificationReport,
    classify,
    is_ep,
    is_hermitian,
    is_involutory_hermitian,
    is_normal,
    is_orthogonal_projector,
    is_partial_isometry,
    is_t_ep,
    is_t_hermitian,
    is_t_normal,
    is_unitary,
)
from .decompositions import HSDecomposition, SvdResult, hs_decompose, pinv, rank_of, svd
from .errors import (
    DomainError,
    InputError,
    NumericalError,
    PreconditionError,
    ShapeError,
    TepkitError,
    UsageError,
)
from .generators import GenSpec, gen
from .matrix import DEFAULT_TOL, Tolerance, Verdict, approx_eq, as_matrix, conj_transpose
from .subspaces import nullspace_contained, nullspaces_equal, ranges_equal

__version__ = "0.1.0"

__all__ = [
    "TepCanonical", "ep_factor", "pinv_identities", "pinv_via_factor",
    "tep_canonical_rect", "tep_canonical_square",
    "T_EP_ROUTES", "ClassificationReport", "classify", "is_ep", "is_hermitian",
    "is_involutory_hermitian", "is_normal", "is_orthogonal_projector",
    "is_partial_isometry", "is_t_ep", "is_t_hermitian", "is_t_normal", "is_unitary",
    "HSDecomposition", "SvdResult", "hs_decompose", "pinv", "rank_of", "svd",
    "DomainError", "InputError", "NumericalError", "PreconditionError", "ShapeError",
    "TepkitError", "UsageError",
    "GenSpec", "gen",
    "DEFAULT_TOL", "Tolerance", "Verdict", "approx_eq", "as_matrix", "conj_transpose",
    "nullspace_contained", "nullspaces_equal", "ranges_equal",
]
