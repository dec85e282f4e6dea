"""Wheel graphs W_n (n odd) and their distance matrices.

Vertices are 0-based internally: index 0 is the hub w_1 and indices 1..n-1 are the
rim vertices w_2..w_n in cycle order.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .exact_algebra import (
    Circulant,
    InvalidInputError,
    RatMatrix,
    is_psd_symmetric,
    vec,
)

logger = logging.getLogger(__name__)


def check_odd_order(n):
    """Validate that n is an odd integer of at least 5."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise InvalidInputError(f"n must be an integer, got {n!r}")
    if n < 5 or n % 2 == 0:
        raise InvalidInputError(f"n must be odd and at least 5, got {n}")
    return n


@dataclass(frozen=True, eq=False)
class WheelGraph:
    n: int
    graph: nx.Graph

    @property
    def hub(self):
        return 0

    def is_adjacent(self, i, j):
        return self.graph.has_edge(i, j)

    def degree(self, i):
        return self.graph.degree(i)


@dataclass(frozen=True)
class DistanceMatrix:
    n: int
    mat: RatMatrix

    @property
    def rim_block(self):
        """The lower-right (n-1)x(n-1) block, Circ(u) for a wheel."""
        return self.mat[1:, 1:]


def build_wheel(n):
    check_odd_order(n)
    graph = nx.wheel_graph(n)
    rim = graph.subgraph(range(1, n))
    if graph.degree(0) != n - 1 or any(graph.degree(i) != 3 for i in range(1, n)):
        raise InvalidInputError(f"unexpected degree sequence for W_{n}")
    if not nx.is_connected(rim) or rim.number_of_edges() != n - 1:
        raise InvalidInputError(f"rim of W_{n} is not a single cycle")
    logger.debug(f"Built W_{n} with {graph.number_of_edges()} edges")
    return WheelGraph(n=n, graph=graph)


def u_vector(n):
    """u = (0, 1, 2, ..., 2, 1) with n-1 components."""
    check_odd_order(n)
    return vec([0, 1] + [2] * (n - 4) + [1])


def distance_matrix_closed(n):
    """Distances of W_n from the case formula: 0 on the diagonal, 1 when adjacent, 2 otherwise."""
    check_odd_order(n)
    rim = n - 1

    def entry(i, j):
        if i == j:
            return 0
        if i == 0 or j == 0 or (i - j) % rim in (1, rim - 1):
            return 1
        return 2

    return DistanceMatrix(n=n, mat=RatMatrix([[entry(i, j) for j in range(n)] for i in range(n)]))


def distance_matrix_block(n):
    """The block form [[0, 1'], [1, Circ(u)]]."""
    ones = [1] * (n - 1)
    return DistanceMatrix(n=n, mat=RatMatrix.bordered(0, ones, ones, Circulant(u_vector(n)).dense()))


def distance_matrix_bfs(g):
    """All-pairs shortest path lengths by breadth-first search.

    Accepts a WheelGraph or any undirected networkx graph whose nodes are 0..n-1.
    """
    graph = g.graph if isinstance(g, WheelGraph) else g
    nodes = sorted(graph.nodes)
    if nodes != list(range(len(nodes))):
        raise InvalidInputError("graph nodes must be labelled 0..n-1")
    lengths = dict(nx.all_pairs_shortest_path_length(graph))
    try:
        rows = [[lengths[i][j] for j in nodes] for i in nodes]
    except KeyError as e:
        raise InvalidInputError(f"graph is not connected (vertex {e} unreachable)") from e
    return DistanceMatrix(n=len(nodes), mat=RatMatrix(rows))


def null_vector_d(n):
    """d = (0, 1, -1, 1, ..., -1)' with D·d = 0."""
    check_odd_order(n)
    return vec([0] + [1 if i % 2 else -1 for i in range(1, n)])


def centering_P(n):
    """P = I - J/n."""
    if n < 1:
        raise InvalidInputError(f"centering matrix needs n >= 1, got {n}")
    return RatMatrix.identity(n) - RatMatrix.ones(n, n).scale(Fraction(1, n))


def gram_G(d):
    """G = -1/2 · P D P."""
    mat = d.mat if isinstance(d, DistanceMatrix) else d
    if not mat.is_square:
        raise InvalidInputError(f"distance matrix must be square, got {mat.shape}")
    p = centering_P(mat.rows)
    return (p @ mat @ p).scale(Fraction(-1, 2))


def is_edm_via_gram(d):
    """Schoenberg direction: a Euclidean distance matrix has a PSD Gram matrix G."""
    return is_psd_symmetric(gram_G(d))


def laplacian_of_graph(g):
    """Ordinary Laplacian S - A of the graph."""
    return RatMatrix(nx.laplacian_matrix(g.graph, nodelist=range(g.n)).toarray())
