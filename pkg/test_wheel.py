from fractions import Fraction

import networkx as nx
import pytest

from models.exact_algebra import InvalidInputError, RatMatrix, is_psd_symmetric, rank
from models.wheel import (
    build_wheel,
    centering_P,
    check_odd_order,
    distance_matrix_bfs,
    distance_matrix_block,
    distance_matrix_closed,
    gram_G,
    is_edm_via_gram,
    laplacian_of_graph,
    null_vector_d,
)

ODD_SWEEP = range(5, 42, 2)


@pytest.mark.parametrize("bad", [6, 3, 1, -5, 7.0, True, "9"])
def test_order_validation(bad):
    with pytest.raises(InvalidInputError):
        check_odd_order(bad)


def test_build_wheel_degrees():
    w5 = build_wheel(5)
    assert w5.degree(w5.hub) == 4
    assert all(w5.degree(i) == 3 for i in range(1, 5))

    w7 = build_wheel(7)
    assert w7.is_adjacent(1, 6)
    assert not w7.is_adjacent(1, 3)
    assert all(w7.is_adjacent(0, i) for i in range(1, 7))


def test_build_wheel_rejects_even():
    with pytest.raises(InvalidInputError):
        build_wheel(6)


def test_closed_distance_matrices(d5, d7):
    assert distance_matrix_closed(5).mat == d5
    assert distance_matrix_closed(7).mat == d7
    assert all(distance_matrix_closed(11).mat[i, i] == 0 for i in range(11))


def test_bfs_matches_closed_form_small():
    for n in (5, 7):
        assert distance_matrix_bfs(build_wheel(n)).mat == distance_matrix_closed(n).mat
    assert distance_matrix_bfs(build_wheel(9)).mat.row(0) == (0,) + (1,) * 8


def test_bfs_on_other_graphs():
    path = distance_matrix_bfs(nx.path_graph(4)).mat
    assert path.row(0) == (0, 1, 2, 3)
    with pytest.raises(InvalidInputError):
        distance_matrix_bfs(nx.empty_graph(3))


@pytest.mark.slow
@pytest.mark.parametrize("n", ODD_SWEEP)
def test_distance_sweep(n):
    d = distance_matrix_closed(n)
    assert d.mat == distance_matrix_bfs(build_wheel(n)).mat
    assert d.mat == distance_matrix_block(n).mat
    assert all(x == 2 * (n - 3) for x in d.rim_block.apply([1] * (n - 1)))
    assert all(x == 0 for x in d.mat.apply(null_vector_d(n)))
    assert rank(d.mat) == n - 1
    g = gram_G(d)
    assert g.is_symmetric()
    assert all(x == 0 for x in g.apply([1] * n))
    assert is_psd_symmetric(g)


def test_null_vector():
    assert null_vector_d(5) == (0, 1, -1, 1, -1)
    assert null_vector_d(7) == (0, 1, -1, 1, -1, 1, -1)
    assert sum(null_vector_d(9)) == 0
    for n in (5, 7):
        assert all(x == 0 for x in distance_matrix_closed(n).mat.apply(null_vector_d(n)))


def test_centering_matrix():
    half = Fraction(1, 2)
    assert centering_P(2) == RatMatrix([[half, -half], [-half, half]])
    p9 = centering_P(9)
    assert p9 @ p9 == p9
    assert rank(centering_P(6)) == 5


def test_gram_matrix(d5, d7):
    p = centering_P(5)
    assert gram_G(d5) == (p @ d5 @ p).scale(Fraction(-1, 2))
    assert all(x == 0 for x in gram_G(distance_matrix_closed(9)).apply([1] * 9))
    assert is_edm_via_gram(d7)


def test_triangle_violation_is_not_edm():
    # square roots 1, 1, 3 break the triangle inequality
    assert not is_edm_via_gram(RatMatrix([[0, 1, 9], [1, 0, 1], [9, 1, 0]]))


def test_ordinary_laplacian_differs_from_special(l5):
    lap = laplacian_of_graph(build_wheel(5))
    assert lap.row(0) == (4, -1, -1, -1, -1)
    assert all(x == 0 for x in lap.apply([1] * 5))
    assert lap != l5
