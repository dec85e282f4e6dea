from fractions import Fraction

import pytest

from models.closed_form import (
    closed_form_pinv,
    dtilde_v_product,
    edm_pinv_identity,
    f_constants,
    f_vector,
    in_delta,
    kd_product,
    ld_plus_2i,
    ld_product,
    lemma_row_pattern,
    m_matrix,
    row_product_ck_dtilde,
    theta_identity,
    vl_product,
    w_vector,
)
from models.exact_algebra import IdentityViolation, InvalidInputError, mp_pinv_oracle, penrose_check
from models.special_laplacian import special_laplacian
from models.wheel import distance_matrix_closed

F = Fraction
LEMMA_SWEEP = range(9, 42, 2)


def test_w_vector():
    assert w_vector(5) == (0, F(1, 4), F(1, 4), F(1, 4), F(1, 4))
    assert w_vector(7)[0] == F(-1, 2)


def test_golden_inverses(d5, k5, d7, k7):
    assert closed_form_pinv(5).K == k5
    assert closed_form_pinv(7).K == k7
    assert closed_form_pinv(7).K[1, 1] == F(-4, 9)
    assert penrose_check(d5, k5).ok
    assert mp_pinv_oracle(d7) == k7


def test_closed_form_matches_oracle_n9():
    d = distance_matrix_closed(9).mat
    assert closed_form_pinv(9).K == mp_pinv_oracle(d)


def test_closed_form_rejects_even():
    with pytest.raises(InvalidInputError):
        closed_form_pinv(8)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(5, 42, 2))
def test_main_sweep(n):
    d = distance_matrix_closed(n).mat
    k = closed_form_pinv(n).K
    assert k == mp_pinv_oracle(d)
    assert penrose_check(d, k).ok
    w = w_vector(n)
    assert d.apply(w) == (F(n - 1, 4),) * n
    assert k.apply([1] * n) == tuple(F(4, n - 1) * x for x in w)
    assert sum(k.apply([1] * n)) == F(4, n - 1)


def test_in_delta():
    assert in_delta((5, 1, 2, 1))
    assert in_delta((7, 1, 2, 3, 2, 1))
    assert not in_delta((0, 1, 2, 3))


def test_row_patterns():
    assert lemma_row_pattern(9, 4) == ("row_last", (2, 2, 2, 1, 0, 1, 2, 2))
    assert lemma_row_pattern(9, 3)[1] == (4, 4, 3, 2, 2, 2, 3, 4)
    assert lemma_row_pattern(9, 1)[1] == (2, 2, 3, 4, 4, 4, 3, 2)
    assert lemma_row_pattern(11, 2)[0] == "row_interior"
    assert lemma_row_pattern(5, 1) is None


def test_row_products_small():
    assert row_product_ck_dtilde(5, 1) == (2, 2, 2, 2)
    assert row_product_ck_dtilde(5, 2) == (2, 1, 0, 1)


@pytest.mark.slow
@pytest.mark.parametrize("n", LEMMA_SWEEP)
def test_row_products_sweep(n):
    for k in range(1, (n - 1) // 2 + 1):
        row = row_product_ck_dtilde(n, k)
        assert row == lemma_row_pattern(n, k)[1]
        assert in_delta(row)


def test_f_vector_small():
    f5 = f_vector(5)
    assert f5.f == (F(-1, 2), F(-1, 8), F(1, 4), F(-1, 8))
    assert f5.pattern_agrees
    f7 = f_vector(7)
    assert f7.f == (F(-2, 3), F(-11, 36), F(-22, 36), F(-46, 36), F(-22, 36), F(-11, 36))
    assert f7.pattern_agrees


def test_f_constants():
    f1, f2, tau, omega = f_constants(9)
    assert f1 == F(-6, 8)
    assert tau - omega == F(-24, 48)


def test_m_matrix():
    assert m_matrix(5).first_row == (-1, 0, 1, 0)
    assert m_matrix(9).first_row[0] == F(1, 2) - 2 + F(2, 8)


def test_ld_product_n5():
    ld = ld_product(5)
    assert ld[0, 0] == -2
    assert ld.row(0)[1:] == (0,) * 4
    assert ld.col(0)[1:] == (F(1, 2),) * 4


def test_kd_and_friends():
    for n in (5, 7, 9):
        kd = kd_product(n)
        assert kd.is_symmetric()
        assert dtilde_v_product(n).is_zero()
        assert vl_product(n).is_zero()
        ld_plus_2i(n)


def test_tampered_laplacian_breaks_ld_product():
    lap = special_laplacian(9).mat
    tampered = lap.with_entry(1, 1, lap[1, 1] + 1)
    with pytest.raises(IdentityViolation) as info:
        ld_product(9, tampered)
    assert info.value.check == "lemma.ld_product"


def test_theta_identity():
    theta, ok = theta_identity(7)
    assert ok
    assert theta.is_symmetric()
    lap = special_laplacian(7).mat
    _, ok = theta_identity(7, lap.with_entry(2, 2, lap[2, 2] + 1))
    assert not ok


def test_edm_pinv_identity():
    assert edm_pinv_identity(5)
    assert edm_pinv_identity(9)


@pytest.mark.slow
@pytest.mark.parametrize("n", LEMMA_SWEEP)
def test_lemma_sweep(n):
    f_vector(n)
    m_matrix(n)
    ld_product(n)
    kd_product(n)
    vl_product(n)
    assert theta_identity(n)[1]
