from itertools import permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from cosmotope.multigraph import (
    GraphParseError,
    Multigraph,
    canonical_key,
    component_count,
    contract_edge,
    cycle_graph,
    delete_edge,
    edge_indices,
    enumerate_acyclic_subsets,
    enumerate_bridge_free_subsets,
    is_acyclic,
    is_bridge,
    is_loop,
    k2n_graph,
    parse_graph,
    path_graph,
    rank,
    star_graph,
    theta_graph,
)

from conftest import TWO_PARALLEL, TRIANGLE, multigraphs


def nx_components(g: Multigraph, h: int) -> int:
    G = nx.MultiGraph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges[i] for i in edge_indices(h))
    return nx.number_connected_components(G)


def oracle_acyclic(g: Multigraph, h: int) -> bool:
    # a forest is loop-free and every edge is a bridge of it
    idx = edge_indices(h)
    if any(g.edges[i][0] == g.edges[i][1] for i in idx):
        return False
    base = nx_components(g, h)
    return all(nx_components(g, h & ~(1 << i)) > base for i in idx)


def oracle_bridge_free(g: Multigraph, h: int) -> bool:
    base = nx_components(g, h)
    return all(nx_components(g, h & ~(1 << i)) == base for i in edge_indices(h))


class TestParse:
    def test_parallel_pair(self):
        g = parse_graph("nodes 2\n0 1\n0 1")
        assert (g.n, g.m) == (2, 2)
        assert g.edges == ((0, 1), (0, 1))

    def test_loop(self):
        g = parse_graph("nodes 1\n0 0")
        assert g.n == 1 and g.edges == ((0, 0),)

    def test_path_with_comments(self):
        g = parse_graph("# a path\n\nnodes 3\n# edges\n0 1\n1 2\n")
        assert g == path_graph(2)

    def test_orientation_kept(self):
        assert parse_graph("nodes 2\n1 0").edges == ((1, 0),)

    @pytest.mark.parametrize(
        "text, lineno",
        [
            ("", 0),
            ("0 1\n", 1),
            ("nodes 2\n0 2\n", 2),
            ("nodes 2\n0 1\n0\n", 3),
            ("nodes x\n", 1),
            ("nodes 2\n0 a\n", 2),
        ],
    )
    def test_errors_name_line(self, text, lineno):
        with pytest.raises(GraphParseError) as info:
            parse_graph(text)
        assert info.value.lineno == lineno

    def test_round_trip(self):
        g = k2n_graph(3)
        assert parse_graph(g.to_text()) == g


def test_acyclic_small_cases():
    assert not is_acyclic(TWO_PARALLEL, 0b11)
    assert not is_acyclic(Multigraph(1, ((0, 0),)), 0b1)
    for h in (0b011, 0b101, 0b110):
        assert is_acyclic(TRIANGLE, h)
    assert not is_acyclic(TRIANGLE, 0b111)


@pytest.mark.parametrize(
    "g, expected",
    [
        (TWO_PARALLEL, [0, 1, 2]),
        (TRIANGLE, [0, 1, 2, 3, 4, 5, 6]),
        (Multigraph(1, ((0, 0),)), [0]),
    ],
)
def test_enumerate_acyclic(g, expected):
    assert list(enumerate_acyclic_subsets(g)) == expected


@pytest.mark.parametrize(
    "g, expected",
    [
        (TRIANGLE, [0, 0b111]),
        (theta_graph(1, 1, 1), [0, 0b011, 0b101, 0b110, 0b111]),
        (path_graph(1), [0]),
    ],
)
def test_enumerate_bridge_free(g, expected):
    assert list(enumerate_bridge_free_subsets(g)) == expected


def test_bridges_and_loops():
    p = path_graph(2)
    assert is_bridge(p, 0) and is_bridge(p, 1)
    assert not any(is_bridge(TRIANGLE, e) for e in range(3))
    loop = Multigraph(1, ((0, 0),))
    assert is_loop(loop, 0) and not is_bridge(loop, 0)
    assert not is_bridge(TWO_PARALLEL, 0)


def test_delete_and_contract():
    # orientation survives contraction: (2, 0) becomes (1, 0)
    assert contract_edge(TRIANGLE, 1).edges == ((0, 1), (1, 0))
    assert contract_edge(TWO_PARALLEL, 0) == Multigraph(1, ((0, 0),))
    d = delete_edge(path_graph(2), 0)
    assert d == Multigraph(3, ((1, 2),))
    assert component_count(d) == 2
    with pytest.raises(ValueError):
        contract_edge(Multigraph(1, ((0, 0),)), 0)


def test_components_and_rank():
    assert component_count(TRIANGLE, 0) == 3
    assert rank(TRIANGLE) == 2
    assert rank(k2n_graph(2)) == 3
    assert component_count(Multigraph(5)) == 5 and rank(Multigraph(5)) == 0


def test_canonical_key():
    g1 = Multigraph(3, ((0, 1), (1, 2), (2, 0)))
    g2 = Multigraph(3, ((2, 0), (0, 1), (1, 2)))
    assert canonical_key(g1) == canonical_key(g2)
    assert canonical_key(cycle_graph(3)) != canonical_key(path_graph(3))


def test_canonical_key_relabel_invariant_on_small_graph():
    g = Multigraph(4, ((0, 1), (1, 2), (2, 2), (2, 3), (0, 1)))
    keys = set()
    for perm in permutations(range(4)):
        h = Multigraph(4, tuple((perm[u], perm[v]) for u, v in g.edges))
        keys.add(canonical_key(h))
    # isomorphic relabelings may map to a few keys, but never to a key of a non-isomorphic graph
    assert canonical_key(star_graph(3)) not in keys


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_acyclic_iff_rank_identity(g):
    for h in range(1 << g.m):
        acyc = is_acyclic(g, h)
        assert acyc == oracle_acyclic(g, h)
        assert acyc == (h.bit_count() == g.n - component_count(g, h))
        assert component_count(g, h) == nx_components(g, h)


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_enumerations_match_brute_force(g):
    all_h = range(1 << g.m)
    assert list(enumerate_acyclic_subsets(g)) == [h for h in all_h if oracle_acyclic(g, h)]
    assert list(enumerate_bridge_free_subsets(g)) == [h for h in all_h if oracle_bridge_free(g, h)]


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_bridge_matches_component_oracle(g):
    for e in range(g.m):
        increases = nx_components(g, g.full_mask & ~(1 << e)) > nx_components(g, g.full_mask)
        assert is_bridge(g, e) == increases


def _nx(g: Multigraph) -> nx.MultiGraph:
    G = nx.MultiGraph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


@settings(max_examples=300, deadline=None)
@given(multigraphs(max_nodes=3, max_edges=3), multigraphs(max_nodes=3, max_edges=3))
def test_canonical_key_equal_implies_isomorphic(g, h):
    if canonical_key(g) == canonical_key(h):
        assert nx.is_isomorphic(_nx(g), _nx(h))
