"""Explicit witness X with L̃DX = C, certifying rank(L̃) >= n-2."""

import logging
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .exact_algebra import Circulant, IdentityViolation, InvalidInputError, RatMatrix, rank, vec
from .special_laplacian import special_laplacian
from .wheel import check_odd_order, distance_matrix_closed

logger = logging.getLogger(__name__)


def _pattern(length, first, even, odd):
    # the k = 1 clause wins over "odd"
    return vec(first if k == 1 else (even if k % 2 == 0 else odd) for k in range(1, length + 1))


def p_vector(n):
    return _pattern(n - 2, -1, -2, 0)


def q_vector(n):
    return _pattern(n - 2, -1, 0, -2)


def y_vector(n):
    return _pattern(n - 3, -2, 0, -1)


@dataclass(frozen=True)
class RankWitness:
    n: int
    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    y: tuple[Fraction, ...]
    Y: Circulant
    X: RatMatrix
    C: RatMatrix


def build_rank_witness(n):
    check_odd_order(n)
    if n < 9:
        raise InvalidInputError(f"the rank witness is defined for n >= 9, got {n}")
    p, q, y = p_vector(n), q_vector(n), y_vector(n)
    big_y = Circulant(y)

    x = np.full((n, n - 2), Fraction(0), dtype=object)
    x[0, 0] = Fraction(n - 7, 2)
    x[0, 1:] = Fraction(n - 5, 2)
    x[1:n - 2, 0] = Fraction(-1, 2)
    x[1:n - 2, 1:] = big_y.dense().array

    c = np.full((n, n - 2), Fraction(0), dtype=object)
    c[:n - 2] = RatMatrix.identity(n - 2).scale(2).array
    c[n - 2] = list(p)
    c[n - 1] = list(q)
    return RankWitness(n=n, p=p, q=q, y=y, Y=big_y, X=RatMatrix(x), C=RatMatrix(c))


def verify_rank_certificate(n, laplacian=None):
    witness = build_rank_witness(n)
    lap = special_laplacian(n).mat if laplacian is None else laplacian
    product = lap @ distance_matrix_closed(n).mat @ witness.X
    ok = product == witness.C
    if not ok:
        logger.warning(f"L̃DX != C for n = {n}")
    return ok


def colsum_X(n):
    """1'X, which equals -2·1'_{n-2}; also checks 1'y = (1-n)/2."""
    witness = build_rank_witness(n)
    if sum(witness.y) != Fraction(1 - n, 2):
        raise IdentityViolation("rank.colsum_y", f"1'y = {sum(witness.y)} for n = {n}")
    sums = witness.X.left_apply([1] * n)
    if any(s != -2 for s in sums):
        raise IdentityViolation("rank.colsum_X", f"1'X = {sums} for n = {n}")
    return sums


def rank_of_special_laplacian(n, laplacian=None):
    check_odd_order(n)
    lap = special_laplacian(n).mat if laplacian is None else laplacian
    r = rank(lap)
    if r != n - 2:
        raise IdentityViolation("rank.laplacian", f"rank(L̃) = {r}, expected {n - 2}")
    return r
