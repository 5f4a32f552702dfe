import numpy as np
import pytest

from tepkit import fixtures
from tepkit.canonical import (
    PINV_IDENTITIES,
    ep_factor,
    pinv_identities,
    pinv_via_factor,
    tep_canonical_rect,
    tep_canonical_square,
)
from tepkit.classes import is_ep
from tepkit.decompositions import pinv
from tepkit.errors import DomainError
from tepkit.generators import GenSpec, gen
from tepkit.matrix import approx_eq, conj_transpose as ct, fro, identity, zeros


@pytest.mark.parametrize("build", [tep_canonical_rect, tep_canonical_square])
def test_shift_fixture(build):
    a, t = fixtures.E3_A, fixtures.E3_T
    form = build(a, t)
    assert form.rank == 2
    assert approx_eq(form.reconstruct(t), a)
    assert all(v.holds for v in form.residuals(a, t).values())


@pytest.mark.parametrize("build", [tep_canonical_rect, tep_canonical_square])
def test_t_itself(build):
    t = fixtures.E1_T
    form = build(t, t)
    assert approx_eq(form.ep_factor, t @ ct(t))
    assert approx_eq(form.reconstruct(t), t)


def test_ep_with_identity_weight():
    a = gen(GenSpec("ep", 4, rank=2, seed=3))
    form = tep_canonical_square(a, identity(4))
    assert approx_eq(form.ep_factor, a)
    assert approx_eq(form.reconstruct(identity(4)), a)


def test_not_t_ep_is_domain_error():
    a = fixtures.E2_A.copy()
    a[1, 0] += 1e-2
    with pytest.raises(DomainError) as info:
        tep_canonical_rect(a, fixtures.E2_T)
    assert "DEF" in info.value.residuals


def test_zero_rank_is_domain_error():
    with pytest.raises(DomainError):
        tep_canonical_rect(zeros(3, 3), fixtures.E1_T)


def test_ep_factor_example():
    expected = np.array([[1, 0, 1], [0, 0, 0], [1, 0, 1]], dtype=complex)
    assert approx_eq(ep_factor(fixtures.E2_A, fixtures.E2_T), expected)


def test_pinv_via_factor_examples():
    for a, t in ((fixtures.E2_A, fixtures.E2_T), (fixtures.E3_A, fixtures.E3_T)):
        assert fro(pinv_via_factor(a, t) - pinv(a)) <= 1e-12


@pytest.mark.parametrize("a,t", [(fixtures.E2_A, fixtures.E2_T), (fixtures.E3_A, fixtures.E3_T)])
def test_pinv_identities_fixtures(a, t):
    ids = pinv_identities(a, t)
    assert tuple(ids) == PINV_IDENTITIES
    assert all(v.holds for v in ids.values())


def test_generated_rectangular_pairs():
    for seed in range(40):
        m, n = 1 + seed % 6, 1 + (seed // 6) % 6
        a, t = gen(GenSpec("t_ep", m, n, 1 + seed % min(m, n), seed=seed))
        form = tep_canonical_rect(a, t)
        assert form.kind == "rectangular"
        assert fro(a - form.reconstruct(t)) <= 1e-10 * fro(a)
        assert is_ep(form.ep_factor)
        assert approx_eq(form.pinv(t), pinv(a))
        assert all(v.holds for v in form.residuals(a, t).values()), seed


def test_generated_square_pairs():
    for seed in range(40):
        n = 1 + seed % 7
        a, t = gen(GenSpec("t_ep", n, n, 1 + seed % n, seed=seed))
        form = tep_canonical_square(a, t)
        assert form.kind == "square" and form.v is None
        assert form.t_in_basis().shape == (n, n)
        assert all(v.holds for v in form.residuals(a, t).values()), seed


def test_square_form_rejects_rectangular():
    a, t = gen(GenSpec("t_ep", 4, 3, 2, seed=0))
    with pytest.raises(DomainError):
        tep_canonical_square(a, t)
