import importlib
from fractions import Fraction

import pytest

from models.exact_algebra import IdentityViolation, InvalidInputError, is_psd_symmetric, rank
from models.special_laplacian import (
    Identity,
    alpha_closed,
    alpha_table,
    alpha_value,
    delta_value,
    g_value,
    gamma_value,
    identity_check,
    identity_indices,
    laplacian_row_sum_block,
    special_laplacian,
    special_matrix,
    special_matrix_row_sums,
    special_vector,
    v_ck_product,
    v_matrix,
    v_vector,
)

F = Fraction


def test_alpha_tables():
    assert alpha_table(5).alphas == (F(1, 8), F(-3, 8))
    assert alpha_table(7).alphas == (F(-5, 36), F(-13, 36), F(19, 36))
    assert alpha_table(7).alpha(3) == F(19, 36)
    assert alpha_table(7).g_values == (4, 3, 4)


def test_g_and_k_range():
    assert g_value(9, 4) == 5
    assert g_value(9, 3) == 4
    with pytest.raises(InvalidInputError):
        alpha_value(9, 5)
    with pytest.raises(InvalidInputError):
        alpha_value(9, 0)


@pytest.mark.parametrize("n", range(5, 42, 2))
def test_alpha_closed_forms_agree(n):
    table = alpha_table(n)
    for k, value in alpha_closed(n).items():
        assert table.alpha(k) == value


def test_special_vectors():
    assert special_vector(5, 1) == (0, 1, 0, 1)
    assert special_vector(5, 2) == (0, 0, 1, 0)
    assert special_vector(7, 2) == (0, 0, 1, 0, 1, 0)
    assert special_matrix(7, 3).dense().row(0) == (0, 0, 0, 1, 0, 0)
    with pytest.raises(InvalidInputError):
        special_vector(7, 4)


def test_v_vector_and_matrix():
    assert v_vector(7) == (1, -1, 1, -1, 1, -1)
    v = v_matrix(7).dense()
    assert v.row(1) == (-1, 1, -1, 1, -1, 1)
    assert all(x == 0 for x in v.apply([1] * 6))


def test_v_ck_n7():
    v = v_vector(7)
    assert v_ck_product(7, 1) == tuple(-2 * x for x in v)
    assert v_ck_product(7, 2) == tuple(2 * x for x in v)
    assert v_ck_product(7, 3) == tuple(-x for x in v)


def test_cm_has_one_unit_per_column():
    c3 = special_matrix(7, 3).dense()
    for j in range(6):
        assert sorted(c3.col(j)) == [0] * 5 + [1]
    assert special_matrix_row_sums(7, 3) == (1,) * 6
    assert special_matrix_row_sums(7, 2) == (2,) * 6


@pytest.mark.parametrize("n", range(5, 42, 2))
def test_special_matrices_and_v_products(n):
    m = (n - 1) // 2
    v = v_vector(n)
    for k in range(1, m + 1):
        c = special_matrix(n, k).dense()
        assert c.is_symmetric()
        assert special_matrix_row_sums(n, k) == ((1 if k == m else 2),) * (n - 1)
        sign = -1 if k % 2 else 1
        factor = (-1 if m % 2 else 1) if k == m else 2 * sign
        assert v_ck_product(n, k) == tuple(factor * x for x in v)


def test_v_ck_mismatch_is_reported(monkeypatch):
    sl = importlib.import_module("models.special_laplacian")

    monkeypatch.setattr(sl, "v_vector", lambda n: (1,) * (n - 1))
    with pytest.raises(IdentityViolation) as excinfo:
        sl.v_ck_product(7, 1)
    assert excinfo.value.check == "laplacian.v_ck"


def test_special_laplacian_golden(l5, l7):
    assert special_laplacian(5).mat == l5
    assert special_laplacian(7).mat == l7


@pytest.mark.parametrize("bad", [4, 6, 3])
def test_special_laplacian_rejects(bad):
    with pytest.raises(InvalidInputError):
        special_laplacian(bad)


def test_row_sum_block():
    for n in (5, 7, 9, 11):
        assert laplacian_row_sum_block(n) == (F(1, 2),) * (n - 1)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(5, 42, 2))
def test_special_laplacian_properties(n):
    lap = special_laplacian(n).mat
    assert lap.is_symmetric()
    assert all(x == 0 for x in lap.apply([1] * n))
    assert rank(lap) == n - 2
    assert is_psd_symmetric(lap)


def test_special_matrices_partition_rim():
    n = 11
    m = (n - 1) // 2
    total = sum((special_matrix(n, k).dense() for k in range(2, m + 1)), special_matrix(n, 1).dense())
    assert all(x == n - 2 for x in total.apply([1] * (n - 1)))
    assert all(total[i, i] == 0 for i in range(n - 1))


def test_identity_values():
    assert identity_check("I1", 5) == (-6, -6)
    assert identity_check(Identity.I2, 5) == (-12, -12)
    assert identity_check("I3", 5) == (F(-1, 8), F(-1, 8))
    assert identity_check("I4", 7, j=3) == (F(-1, 3), F(-1, 3))
    assert identity_check("I5", 5) == (F(-5, 8), F(-5, 8))


def test_identity_errors():
    with pytest.raises(InvalidInputError):
        identity_check("I4", 7)
    with pytest.raises(InvalidInputError):
        identity_check("I4", 7, j=4)
    with pytest.raises(ValueError):
        identity_check("I6", 7)


@pytest.mark.parametrize("n", range(5, 102, 2))
def test_identity_suite(n):
    for which, j in identity_indices(n):
        lhs, rhs = identity_check(which, n, j)
        assert lhs == rhs, f"{which.value} j={j} n={n}"


def test_delta_and_gamma():
    assert delta_value(5) == F(-1, 8)
    assert gamma_value(7) == F(-1, 3)
    assert gamma_value(9) == F(2, 8)
    with pytest.raises(InvalidInputError):
        gamma_value(5)
