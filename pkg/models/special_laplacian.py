"""The special Laplacian of W_n and the alternating-sign coefficients alpha_k."""
import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exact_algebra import Circulant, IdentityViolation, InvalidInputError, RatMatrix, circ_mul_row, vec
from .wheel import check_odd_order

logger = logging.getLogger(__name__)


def _sign(exponent):
    """(-1) ** exponent by parity."""
    return 1 if exponent % 2 == 0 else -1


def half_order(n):
    """m = (n - 1) / 2."""
    return (check_odd_order(n) - 1) // 2


def _check_k(n, k):
    m = half_order(n)
    if not 1 <= k <= m:
        raise InvalidInputError(f"k must lie in 1..{m} for n = {n}, got {k}")
    return m


def g_value(n, k):
    """g(k) = (n + (-1)^(m-k)) / 2."""
    m = _check_k(n, k)
    return (n + _sign(m - k)) // 2


def alpha_value(n, k):
    m = _check_k(n, k)
    return Fraction(_sign(g_value(n, k)) * (2 * m * m - 6 * (m - k) ** 2 + 1), 6 * (n - 1))


@dataclass(frozen=True)
class AlphaTable:
    n: int
    m: int
    alphas: tuple
    g_values: tuple

    def alpha(self, k):
        return self.alphas[k - 1]


def alpha_table(n):
    m = half_order(n)
    ks = range(1, m + 1)
    return AlphaTable(
        n=n,
        m=m,
        alphas=tuple(alpha_value(n, k) for k in ks),
        g_values=tuple(g_value(n, k) for k in ks),
    )


def alpha_closed(n):
    """Explicit forms of alpha_1, alpha_2, alpha_{m-1} and alpha_m."""
    m = half_order(n)
    den = 6 * (n - 1)
    forms = {
        1: Fraction(-4 * m * m + 12 * m - 5, den),
        2: Fraction(4 * m * m - 24 * m + 23, den),
        m - 1: Fraction(_sign(m) * (2 * m * m - 5), den),
        m: Fraction(_sign(m + 1) * (2 * m * m + 1), den),
    }
    return dict(sorted(forms.items()))


def special_vector(n, k):
    """c^k: ones at (1-based) positions k+1 and n-k, zeros elsewhere."""
    _check_k(n, k)
    return vec(1 if j in (k + 1, n - k) else 0 for j in range(1, n))


def special_matrix(n, k):
    return Circulant(special_vector(n, k))


def special_matrix_row_sums(n, k):
    """C_k·1, which is 2·1 for k < m and 1 for k = m.

    C_m is a permutation matrix, so each of its columns also holds exactly one 1.
    """
    m = _check_k(n, k)
    dense = special_matrix(n, k).dense()
    if not dense.is_symmetric():
        raise IdentityViolation("laplacian.ck_symmetric", f"C_{k} is not symmetric for n = {n}")
    expected = 1 if k == m else 2
    sums = dense.apply([1] * (n - 1))
    if any(s != expected for s in sums):
        raise IdentityViolation("laplacian.ck_row_sums", f"C_{k}·1 = {sums} for n = {n}")
    ones_per_column = [sum(1 for x in dense.col(j) if x == 1) for j in range(n - 1)]
    if any(c != expected for c in ones_per_column):
        raise IdentityViolation("laplacian.ck_columns", f"ones per column of C_{k}: {ones_per_column}")
    return sums


def v_vector(n):
    """v = (1, -1, 1, ..., -1) with n-1 components."""
    check_odd_order(n)
    return vec(1 if i % 2 else -1 for i in range(1, n))


def v_matrix(n):
    return Circulant(v_vector(n))


def v_ck_product(n, k):
    """v·C_k by multiplication; (-1)^k 2v for k < m and (-1)^m v for k = m."""
    m = _check_k(n, k)
    v = v_vector(n)
    product = circ_mul_row(v, special_matrix(n, k))
    factor = _sign(m) if k == m else 2 * _sign(k)
    expected = tuple(factor * x for x in v)
    if product != expected:
        raise IdentityViolation("laplacian.v_ck", f"v·C_{k} = {product}, expected {expected} for n = {n}")
    return product


@dataclass(frozen=True)
class SpecialLaplacian:
    n: int
    mat: RatMatrix


def alpha_combination_row(n):
    """First row of sum_k alpha_k C_k."""
    table = alpha_table(n)
    row = [Fraction(0)] * (n - 1)
    for k, a in enumerate(table.alphas, start=1):
        for j, c in enumerate(special_vector(n, k)):
            if c:
                row[j] += a
    return tuple(row)


def special_laplacian(n):
    """Corner (n-1)/2, rim block n(n-2)/(6(n-1)) I + sum alpha_k C_k, border -1/2."""
    check_odd_order(n)
    first_row = list(alpha_combination_row(n))
    first_row[0] += Fraction(n * (n - 2), 6 * (n - 1))
    border = [Fraction(-1, 2)] * (n - 1)
    mat = RatMatrix.bordered(Fraction(n - 1, 2), border, border, Circulant(first_row).dense())
    logger.debug(f"Assembled special Laplacian for n = {n}")
    return SpecialLaplacian(n=n, mat=mat)


def laplacian_row_sum_block(n):
    """B = n(n-2)/(6(n-1)) 1 + sum alpha_k C_k 1, which must equal 1/2 · 1."""
    m = half_order(n)
    table = alpha_table(n)
    scalar = Fraction(n * (n - 2), 6 * (n - 1))
    rows = [special_matrix(n, k).dense().apply([1] * (n - 1)) for k in range(1, m + 1)]
    block = tuple(scalar + sum(a * r[i] for a, r in zip(table.alphas, rows)) for i in range(n - 1))
    if any(b != Fraction(1, 2) for b in block):
        raise IdentityViolation("laplacian.row_sum_block", f"B = {block} for n = {n}")
    return block


class Identity(str, Enum):
    I1 = "I1"
    I2 = "I2"
    I3 = "I3"
    I4 = "I4"
    I5 = "I5"


def delta_value(n):
    """delta = 2 sum alpha_k - alpha_m."""
    m = half_order(n)
    return 2 * sum(alpha_value(n, k) for k in range(1, m + 1)) - alpha_value(n, m)


def gamma_value(n):
    """gamma = alpha_m + alpha_{m-2} + 2 alpha_{m-1}; needs m >= 3."""
    m = half_order(n)
    if m < 3:
        raise InvalidInputError(f"gamma needs n >= 7, got {n}")
    return alpha_value(n, m) + alpha_value(n, m - 2) + 2 * alpha_value(n, m - 1)


def identity_check(which, n, j=None):
    """Return (lhs, rhs) of the named alpha identity.

    The left side is summed term by term from g(k) and alpha_k; the right side
    is the closed form.
    """
    which = Identity(which)
    m = half_order(n)
    ks = range(1, m + 1)

    def body(k):
        return 2 * m * m - 6 * (m - k) ** 2 + 1

    if which is Identity.I1:
        lhs = Fraction(sum(_sign(g_value(n, k)) * body(k) for k in ks))
        rhs = Fraction(-3 * m * m + 3 * m if m % 2 == 0 else -m * m + 3 * m + 1)
    elif which is Identity.I2:
        lhs = Fraction(sum(_sign(k + g_value(n, k)) * body(k) for k in ks))
        rhs = Fraction(-3 * m * m)
    elif which is Identity.I3:
        lhs = delta_value(n)
        rhs = Fraction(6 * m - 4 * m * m + 1, 6 * (n - 1))
    elif which is Identity.I4:
        if j is None or not 3 <= j <= m:
            raise InvalidInputError(f"I4 needs j, j-1, j-2 in 1..{m}, got j = {j}")
        lhs = 2 * alpha_value(n, j - 1) + alpha_value(n, j) + alpha_value(n, j - 2)
        rhs = Fraction(_sign(j) * 2, n - 1)
    else:
        lhs = 2 * sum(_sign(k) * alpha_value(n, k) for k in ks) - _sign(m) * alpha_value(n, m)
        rhs = Fraction(2 * n - n * n, 6 * (n - 1))
    return lhs, rhs


def identity_indices(n):
    """Every (identity, j) pair admissible for n."""
    m = half_order(n)
    pairs = [(Identity.I1, None), (Identity.I2, None), (Identity.I3, None)]
    pairs += [(Identity.I4, j) for j in range(3, m + 1)]
    pairs.append((Identity.I5, None))
    return pairs
