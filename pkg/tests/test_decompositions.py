import numpy as np
import pytest
from hypothesis import given

from tepkit import fixtures
from tepkit.decompositions import hs_decompose, penrose_residuals, pinv, rank_of, svd
from tepkit.errors import DomainError, InputError, ShapeError
from tepkit.matrix import approx_eq, block_diag, conj_transpose as ct, fro, identity, zeros
from tepkit.generators import GenSpec, gen

from strategies import low_rank_matrices


def test_svd_diagonal():
    f = svd(np.diag([3.0, 2.0]))
    assert np.allclose(f.sigma, [3, 2]) and f.rank == 2


def test_svd_partial_isometry_fixture():
    f = svd(fixtures.E1_T)
    assert np.allclose(f.sigma, [1, 1, 0]) and f.rank == 2


def test_svd_reconstruction_seed_42():
    rng = np.random.default_rng(42)
    a = rng.standard_normal((5, 4)) + 1j * rng.standard_normal((5, 4))
    f = svd(a)
    assert fro(a - f.reconstruct()) <= 1e-12 * fro(a)
    assert approx_eq(ct(f.u) @ f.u, identity(5))
    assert approx_eq(ct(f.v) @ f.v, identity(4))


@given(low_rank_matrices())
def test_svd_invariants(a):
    f = svd(a)
    assert np.all(np.diff(f.sigma) <= 0) and np.all(f.sigma >= 0)
    assert fro(a - f.reconstruct()) <= 1e-10 * fro(a) + 1e-12
    for col in f.u.T:
        nz = col[np.abs(col) > 1e-12]
        if nz.size:
            assert abs(nz[0].imag) <= 1e-15 and nz[0].real > 0


def test_svd_is_deterministic(rng):
    a = rng.standard_normal((4, 6)) + 0j
    f, g = svd(a), svd(a)
    assert np.array_equal(f.u, g.u) and np.array_equal(f.v, g.v)


def test_svd_rejects_non_finite():
    with pytest.raises(InputError):
        svd(np.array([[1.0, np.nan]]))


def test_zero_matrix():
    f = svd(zeros(3, 2))
    assert f.rank == 0
    p = pinv(zeros(3, 2))
    assert p.shape == (2, 3) and not p.any()


def test_pinv_examples():
    assert approx_eq(pinv(fixtures.E1_T), ct(fixtures.E1_T))
    assert approx_eq(pinv(np.diag([2.0, 0.0])), np.diag([0.5, 0.0]))


def test_rank_examples(rng):
    assert rank_of(fixtures.E2_A) == 1
    assert rank_of(identity(4)) == 4
    x, y = rng.standard_normal((5, 1)), rng.standard_normal((3, 1))
    assert rank_of(x @ y.T) == 1


@given(low_rank_matrices())
def test_pinv_properties(a):
    p = pinv(a)
    assert approx_eq(pinv(p), a)
    assert approx_eq(pinv(ct(a)), ct(p))
    proj = a @ p
    assert approx_eq(proj @ proj, proj) and approx_eq(proj, ct(proj))
    assert max(penrose_residuals(a, p)) <= 1e-10 * (1 + fro(a))


def test_pinv_partial_isometries():
    for seed in range(20):
        t = gen(GenSpec("partial_isometry", 5, 3, seed % 4, seed=seed))
        assert approx_eq(pinv(t), ct(t))


def test_hs_already_in_form():
    hs = hs_decompose(np.diag([5.0, 0.0]))
    assert hs.r == 1
    assert np.allclose(hs.sigma_block, [[5]])
    assert np.allclose(np.abs(hs.k), [[1]]) and np.allclose(hs.l, [[0]])
    assert approx_eq(hs.reconstruct(), np.diag([5.0, 0.0]))


def test_hs_shift_fixture():
    a = fixtures.E3_A
    hs = hs_decompose(a)
    assert hs.r == 2
    assert approx_eq(hs.k @ ct(hs.k) + hs.l @ ct(hs.l), identity(2))
    assert approx_eq(hs.reconstruct(), a)


def test_hs_unitary():
    q = gen(GenSpec("unitary", 3, seed=5))
    hs = hs_decompose(q)
    assert hs.r == 3 and hs.l.shape == (3, 0)
    assert approx_eq(hs.k @ ct(hs.k), identity(3))
    assert approx_eq(hs.reconstruct(), q)


@given(low_rank_matrices(square=True))
def test_hs_invariants(a):
    if rank_of(a) == 0:
        with pytest.raises(DomainError, match="rank zero"):
            hs_decompose(a)
        return
    hs = hs_decompose(a)
    r, n = hs.r, a.shape[0]
    assert approx_eq(hs.reconstruct(), a)
    assert approx_eq(hs.k @ ct(hs.k) + hs.l @ ct(hs.l), identity(r))
    assert approx_eq(hs.pinv(), pinv(a))
    assert approx_eq(a @ pinv(a), hs.u @ block_diag(identity(r), zeros(n - r, n - r)) @ ct(hs.u))


def test_hs_rejects_rectangular():
    with pytest.raises(ShapeError):
        hs_decompose(zeros(2, 3))
