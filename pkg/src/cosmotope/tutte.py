"""Tutte polynomial by subset expansion and by memoized deletion-contraction."""

from __future__ import annotations

from .multigraph import (
    Multigraph,
    SubsetLimitError,
    bridges,
    canonical_key,
    component_count,
    contract_edge,
    delete_edge,
    remove_isolated_nodes,
)
from .polynomials import BivarPolynomial

DEFAULT_SUBSET_EDGE_LIMIT = 20
DEFAULT_CACHE_ENTRIES = 10**6


def tutte_subset_expansion(g: Multigraph, max_edges: int = DEFAULT_SUBSET_EDGE_LIMIT) -> BivarPolynomial:
    """Sum ``(x-1)^(c(H)-c(E)) (y-1)^(c(H)+|H|-|V|)`` over all ``2**m`` subsets."""
    if g.m > max_edges:
        raise SubsetLimitError(f"{g.m} edges exceeds subset-expansion limit {max_edges}")
    c_full = component_count(g)
    # Accumulate the (x-1)^a (y-1)^b exponent histogram first, expand once.
    hist: dict[tuple[int, int], int] = {}
    for h in range(1 << g.m):
        c = component_count(g, h)
        key = (c - c_full, c + h.bit_count() - g.n)
        hist[key] = hist.get(key, 0) + 1
    xm1 = BivarPolynomial({(1, 0): 1, (0, 0): -1})
    ym1 = BivarPolynomial({(0, 1): 1, (0, 0): -1})
    total = BivarPolynomial()
    for (a, b), count in hist.items():
        total = total + (xm1**a * ym1**b).scale(count)
    return total


class _BoundedCache(dict):
    def __init__(self, max_entries: int):
        super().__init__()
        self.max_entries = max_entries

    def put(self, key, value):
        if len(self) < self.max_entries:
            self[key] = value


def split_pivot(g: Multigraph) -> tuple[int | None, int, int]:
    """Return ``(pivot, loops, bridges)``.

    ``pivot`` is the lowest-index edge that is neither a loop nor a bridge, or
    None when every edge is one of the two; the counts are only meaningful in
    the latter case.
    """
    br = bridges(g)
    loops = 0
    for i, (u, v) in enumerate(g.edges):
        if u == v:
            loops += 1
        elif i not in br:
            return i, 0, 0
    return None, loops, len(br)


def tutte_delcon(g: Multigraph, max_cache: int = DEFAULT_CACHE_ENTRIES) -> BivarPolynomial:
    cache = _BoundedCache(max_cache)

    def rec(h: Multigraph) -> BivarPolynomial:
        h = remove_isolated_nodes(h)
        key = canonical_key(h)
        hit = cache.get(key)
        if hit is not None:
            return hit
        pivot, loops, nbridges = split_pivot(h)
        if pivot is None:
            result = BivarPolynomial.x_power(nbridges, loops)
        else:
            result = rec(delete_edge(h, pivot)) + rec(contract_edge(h, pivot))
        cache.put(key, result)
        return result

    return rec(g)


def count_acyclic_via_tutte(g: Multigraph) -> int:
    return tutte_delcon(g).evaluate(2, 1)
