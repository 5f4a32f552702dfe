import numpy as np
import pytest
from hypothesis import given

from tepkit.errors import InputError, ShapeError
from tepkit.matrix import (
    DEFAULT_TOL,
    EPS,
    Tolerance,
    Verdict,
    all_of,
    approx_eq,
    as_matrix,
    block_diag,
    compare,
    conj_transpose,
    fro,
    identity,
    vanishes,
    zeros,
)

from strategies import low_rank_matrices


def test_conj_transpose_examples():
    a = np.array([[0, 1, 1], [0, 0, 0], [0, 1, 1]])
    expected = np.array([[0, 0, 0], [1, 0, 1], [1, 0, 1]])
    assert np.array_equal(conj_transpose(a), expected)
    assert np.array_equal(conj_transpose(identity(3)), identity(3))
    assert conj_transpose(np.array([[1j]]))[0, 0] == -1j


def test_conj_transpose_shape():
    assert conj_transpose(zeros(2, 5)).shape == (5, 2)


@given(low_rank_matrices())
def test_conj_transpose_involution_bit_exact(a):
    assert np.array_equal(conj_transpose(conj_transpose(a)), a)


@given(low_rank_matrices())
def test_norm_of_adjoint(a):
    assert abs(fro(a) - fro(conj_transpose(a))) <= DEFAULT_TOL.eq_atol


def test_approx_eq_examples(rng):
    a = rng.standard_normal((3, 3)) + 0j
    assert approx_eq(a, a)
    tiny = zeros(3, 3)
    tiny[1, 2] = 1e-13
    assert approx_eq(zeros(3, 3), tiny)
    assert not approx_eq(identity(2), 2 * identity(2))


def test_approx_eq_shape_mismatch_is_error():
    with pytest.raises(ShapeError):
        approx_eq(zeros(2, 3), zeros(3, 2))


def test_compare_residual_and_ratio():
    v = compare(identity(2), 2 * identity(2))
    assert not v.holds
    assert v.residual == pytest.approx(np.sqrt(2))
    assert v.ratio > 1


def test_tolerance_defaults():
    assert DEFAULT_TOL.eq_atol == 1e-12
    assert DEFAULT_TOL.eq_rtol == 1e-10
    assert DEFAULT_TOL.rank_cutoff((3, 7)) == 7 * EPS
    assert Tolerance(rank_rtol=1e-8).rank_cutoff((3, 7)) == 1e-8
    assert DEFAULT_TOL.bound(2.0, 5.0) == 1e-12 + 5e-10


@pytest.mark.parametrize("field", ["rank_rtol", "eq_atol", "eq_rtol"])
@pytest.mark.parametrize("value", [-1.0, float("nan"), float("inf")])
def test_tolerance_rejects_bad_values(field, value):
    with pytest.raises(InputError):
        Tolerance(**{field: value})


def test_verdict_confidence():
    assert Verdict(True, 0.0, 0.01).confident
    assert Verdict(False, 1.0, 50.0).confident
    assert not Verdict(True, 0.0, 0.5).confident
    assert bool(Verdict(True, 0.0, 0.0)) and not bool(Verdict(False, 1.0, 2.0))


def test_all_of():
    v = all_of(Verdict(True, 1e-15, 0.01), Verdict(False, 0.3, 30.0))
    assert v == Verdict(False, 0.3, 30.0)
    assert all_of().holds


def test_vanishes():
    assert vanishes(np.full((2, 2), 1e-14), 1.0).holds
    assert not vanishes(np.full((2, 2), 1e-3), 1.0).holds


def test_as_matrix_validation():
    assert as_matrix([[1, 2]]).dtype == np.complex128
    with pytest.raises(InputError):
        as_matrix([[np.nan]])
    with pytest.raises(InputError):
        as_matrix([[np.inf, 0]])
    with pytest.raises(ShapeError):
        as_matrix(np.zeros((2, 2, 2)))


def test_block_diag_with_empty_blocks():
    b = block_diag(identity(2), zeros(0, 0), 3 * identity(1))
    assert b.shape == (3, 3)
    assert np.array_equal(np.diag(b), [1, 1, 3])
    assert block_diag(zeros(2, 0), zeros(0, 3)).shape == (2, 3)


def test_zero_tolerance_means_exact():
    exact = Tolerance(eq_atol=0.0, eq_rtol=0.0)
    assert compare(identity(2), identity(2), exact) == Verdict(True, 0.0, 0.0)
    v = compare(identity(2), identity(2) + 1e-17j, exact)
    assert not v.holds and v.ratio == float("inf")
    assert vanishes(zeros(2, 2), 0.0, exact).holds
