from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from cosmotope.multigraph import Multigraph, cycle_graph, path_graph, theta_graph

SINGLE_EDGE = Multigraph(2, ((0, 1),))
SINGLE_LOOP = Multigraph(1, ((0, 0),))
TWO_PARALLEL = Multigraph(2, ((0, 1), (0, 1)))
PATH2 = path_graph(2)
TRIANGLE = cycle_graph(3)
THETA111 = theta_graph(1, 1, 1)
TRIANGLE_PENDANT = Multigraph(4, ((0, 1), (1, 2), (2, 0), (2, 3)))

# graphs with n + m <= 9 on which the full geometric pipeline runs
GEOMETRY_SUITE = {
    "single_edge": SINGLE_EDGE,
    "single_loop": SINGLE_LOOP,
    "two_parallel": TWO_PARALLEL,
    "path2": PATH2,
    "triangle": TRIANGLE,
    "theta111": THETA111,
    "triangle_pendant": TRIANGLE_PENDANT,
}


def random_multigraph(rng: random.Random, max_nodes: int = 6, max_edges: int = 10, loop_prob: float = 0.15) -> Multigraph:
    n = rng.randint(1, max_nodes)
    m = rng.randint(0, max_edges)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        if n == 1 or rng.random() < loop_prob:
            v = u
        else:
            v = rng.choice([x for x in range(n) if x != u])
        edges.append((u, v))
    return Multigraph(n, tuple(edges))


def random_suite(count: int, seed: int, **kw) -> list[Multigraph]:
    rng = random.Random(seed)
    return [random_multigraph(rng, **kw) for _ in range(count)]


@st.composite
def multigraphs(draw, max_nodes: int = 5, max_edges: int = 7) -> Multigraph:
    n = draw(st.integers(1, max_nodes))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=max_edges))
    return Multigraph(n, tuple(edges))


@pytest.fixture(params=sorted(GEOMETRY_SUITE), ids=sorted(GEOMETRY_SUITE))
def suite_graph(request) -> Multigraph:
    return GEOMETRY_SUITE[request.param]
