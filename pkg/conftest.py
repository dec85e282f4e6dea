"""Shared fixtures: the W5 and W7 matrices printed alongside the construction."""
from fractions import Fraction

import pytest

from models.exact_algebra import RatMatrix


def scaled(factor, rows):
    return RatMatrix(rows).scale(Fraction(1, factor))


@pytest.fixture
def d5():
    return RatMatrix([
        [0, 1, 1, 1, 1],
        [1, 0, 1, 2, 1],
        [1, 1, 0, 1, 2],
        [1, 2, 1, 0, 1],
        [1, 1, 2, 1, 0],
    ])


@pytest.fixture
def d7():
    return RatMatrix([
        [0, 1, 1, 1, 1, 1, 1],
        [1, 0, 1, 2, 2, 2, 1],
        [1, 1, 0, 1, 2, 2, 2],
        [1, 2, 1, 0, 1, 2, 2],
        [1, 2, 2, 1, 0, 1, 2],
        [1, 2, 2, 2, 1, 0, 1],
        [1, 1, 2, 2, 2, 1, 0],
    ])


@pytest.fixture
def l5():
    return scaled(8, [
        [16, -4, -4, -4, -4],
        [-4, 5, 1, -3, 1],
        [-4, 1, 5, 1, -3],
        [-4, -3, 1, 5, 1],
        [-4, 1, -3, 1, 5],
    ])


@pytest.fixture
def k5():
    return scaled(4, [
        [-4, 1, 1, 1, 1],
        [1, -1, 0, 1, 0],
        [1, 0, -1, 0, 1],
        [1, 1, 0, -1, 0],
        [1, 0, 1, 0, -1],
    ])


@pytest.fixture
def l7():
    return scaled(36, [
        [108, -18, -18, -18, -18, -18, -18],
        [-18, 35, -5, -13, 19, -13, -5],
        [-18, -5, 35, -5, -13, 19, -13],
        [-18, -13, -5, 35, -5, -13, 19],
        [-18, 19, -13, -5, 35, -5, -13],
        [-18, -13, 19, -13, -5, 35, -5],
        [-18, -5, -13, 19, -13, -5, 35],
    ])


@pytest.fixture
def k7():
    return scaled(18, [
        [-24, 3, 3, 3, 3, 3, 3],
        [3, -8, 2, 4, -4, 4, 2],
        [3, 2, -8, 2, 4, -4, 4],
        [3, 4, 2, -8, 2, 4, -4],
        [3, -4, 4, 2, -8, 2, 4],
        [3, 4, -4, 4, 2, -8, 2],
        [3, 2, 4, -4, 4, 2, -8],
    ])
