"""Multigraphs with loops and parallel edges, plus the edge-subset enumerations
used by the h*-formulas.

Edge subsets are plain ``int`` bitmasks: bit ``i`` set means edge ``i`` is in
the subset.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence


class GraphParseError(ValueError):
    """Malformed graph file. ``lineno`` is 1-based (0 if the input is empty)."""

    def __init__(self, message: str, lineno: int = 0):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}" if lineno else message)


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path compression and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already joined."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]
        self.count -= 1
        return True

    def copy(self) -> "UnionFind":
        other = UnionFind.__new__(UnionFind)
        other.parent = list(self.parent)
        other.size = list(self.size)
        other.count = self.count
        return other


@dataclass(frozen=True)
class Multigraph:
    node_count: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be non-negative")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in edges:
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.node_count} nodes")
        object.__setattr__(self, "edges", edges)

    @property
    def n(self) -> int:
        return self.node_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.m) - 1

    def loop_count(self) -> int:
        return sum(1 for u, v in self.edges if u == v)

    def isolated_nodes(self) -> list[int]:
        touched = {x for e in self.edges for x in e}
        return [u for u in range(self.n) if u not in touched]

    def to_text(self) -> str:
        lines = [f"nodes {self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Multigraph:
    """Parse the ``nodes <n>`` / ``<u> <v>`` text format.

    Blank lines and lines starting with ``#`` are ignored. Edges keep file
    order, which fixes both edge indices and (tail, head) orientation.
    """
    node_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if node_count is None:
            if len(parts) != 2 or parts[0] != "nodes":
                raise GraphParseError("expected header 'nodes <n>'", lineno)
            try:
                node_count = int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad node count {parts[1]!r}", lineno) from None
            if node_count < 0:
                raise GraphParseError("node count must be non-negative", lineno)
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected '<u> <v>', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer endpoint in {line!r}", lineno) from None
        for x in (u, v):
            if not 0 <= x < node_count:
                raise GraphParseError(f"endpoint {x} out of range 0..{node_count - 1}", lineno)
        edges.append((u, v))
    if node_count is None:
        raise GraphParseError("missing header 'nodes <n>'")
    return Multigraph(node_count, tuple(edges))


def edge_indices(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def component_count(g: Multigraph, h: int | None = None) -> int:
    """Connected components of ``(V, h)`` counted over all nodes; ``h=None`` means all edges."""
    uf = UnionFind(g.n)
    for i, (u, v) in enumerate(g.edges):
        if h is None or (h >> i) & 1:
            uf.union(u, v)
    return uf.count


def rank(g: Multigraph) -> int:
    return g.n - component_count(g)


def is_acyclic(g: Multigraph, h: int) -> bool:
    uf = UnionFind(g.n)
    for i, (u, v) in enumerate(g.edges):
        if (h >> i) & 1 and not uf.union(u, v):
            return False
    return True


def enumerate_acyclic_subsets(g: Multigraph) -> Iterator[int]:
    """Yield every acyclic edge subset once, in increasing bitmask order.

    Depth-first over edges from the highest index down, so that the "skip"
    branch (bit 0) is explored before the "take" branch (bit 1); only
    acyclic partial choices are extended.
    """
    m = g.m
    if m == 0:
        yield 0
        return

    def rec(i: int, mask: int, uf: UnionFind) -> Iterator[int]:
        if i < 0:
            yield mask
            return
        yield from rec(i - 1, mask, uf)
        u, v = g.edges[i]
        if uf.find(u) != uf.find(v):
            taken = uf.copy()
            taken.union(u, v)
            yield from rec(i - 1, mask | (1 << i), taken)

    yield from rec(m - 1, 0, UnionFind(g.n))


def _bridges_within(g: Multigraph, h: int) -> set[int]:
    """Edges of ``h`` that are bridges of the subgraph ``(V, h)``.

    Iterative Tarjan low-link, skipping the parent *edge* (not the parent
    node) so parallel edges are handled correctly.
    """
    adj: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if (h >> i) & 1 and u != v:
            adj[u].append((v, i))
            adj[v].append((u, i))
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[int] = set()
    timer = 0
    for root in range(g.n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            node, via, it = stack[-1]
            advanced = False
            for nxt, eid in it:
                if eid == via:
                    continue
                if disc[nxt] == -1:
                    disc[nxt] = low[nxt] = timer
                    timer += 1
                    stack.append((nxt, eid, iter(adj[nxt])))
                    advanced = True
                    break
                low[node] = min(low[node], disc[nxt])
            if advanced:
                continue
            stack.pop()
            if stack:
                parent = stack[-1][0]
                low[parent] = min(low[parent], low[node])
                if low[node] > disc[parent]:
                    bridges.add(via)
    return bridges


def bridges(g: Multigraph) -> set[int]:
    return _bridges_within(g, g.full_mask)


def is_bridge(g: Multigraph, e: int) -> bool:
    return e in bridges(g)


def is_loop(g: Multigraph, e: int) -> bool:
    u, v = g.edges[e]
    return u == v


def is_bridge_free(g: Multigraph, h: int) -> bool:
    return not _bridges_within(g, h)


def enumerate_bridge_free_subsets(g: Multigraph, limit: int | None = None) -> Iterator[int]:
    """Yield each edge subset whose induced subgraph has no bridge, in bitmask order.

    Scans all ``2**m`` subsets; ``limit`` caps that scan.
    """
    total = 1 << g.m
    if limit is not None and total > limit:
        raise SubsetLimitError(f"2^{g.m} edge subsets exceeds limit {limit}")
    for h in range(total):
        if is_bridge_free(g, h):
            yield h


class SubsetLimitError(RuntimeError):
    pass


def delete_edge(g: Multigraph, e: int) -> Multigraph:
    return Multigraph(g.n, g.edges[:e] + g.edges[e + 1:])


def contract_edge(g: Multigraph, e: int) -> Multigraph:
    """Merge the endpoints of ``e`` (tail survives), renumber nodes densely."""
    u, v = g.edges[e]
    if u == v:
        raise ValueError(f"cannot contract loop {e}")
    keep, gone = min(u, v), max(u, v)

    def relabel(x: int) -> int:
        if x == gone:
            x = keep
        return x - 1 if x > gone else x

    edges = tuple((relabel(a), relabel(b)) for i, (a, b) in enumerate(g.edges) if i != e)
    return Multigraph(g.n - 1, edges)


def remove_isolated_nodes(g: Multigraph) -> Multigraph:
    isolated = set(g.isolated_nodes())
    if not isolated:
        return g
    remap = {}
    for u in range(g.n):
        if u not in isolated:
            remap[u] = len(remap)
    return Multigraph(len(remap), tuple((remap[u], remap[v]) for u, v in g.edges))


def disjoint_union(a: Multigraph, b: Multigraph) -> Multigraph:
    shift = a.n
    return Multigraph(a.n + b.n, a.edges + tuple((u + shift, v + shift) for u, v in b.edges))


def canonical_key(g: Multigraph) -> bytes:
    """A deterministic relabeling of ``g`` serialized to bytes.

    The key *is* a graph isomorphic to ``g`` (node count plus sorted edge
    multiset after relabeling), so equal keys imply isomorphic graphs. The
    relabeling is a BFS from low-degree nodes with degree-based tie breaking;
    isomorphic inputs usually, not always, collide.
    """
    n = g.n
    degree = [0] * n
    loops = [0] * n
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in g.edges:
        if u == v:
            loops[u] += 1
        else:
            degree[u] += 1
            degree[v] += 1
            adj[u].append(v)
            adj[v].append(u)

    def sig(x: int) -> tuple:
        return (degree[x], loops[x], sorted(degree[y] for y in adj[x]))

    sigs = [sig(x) for x in range(n)]
    order: list[int] = []
    seen = [False] * n
    for start in sorted(range(n), key=lambda x: sigs[x]):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            x = queue.popleft()
            order.append(x)
            for y in sorted(set(adj[x]), key=lambda y: sigs[y]):
                if not seen[y]:
                    seen[y] = True
                    queue.append(y)
    label = {x: i for i, x in enumerate(order)}
    relabeled = sorted(tuple(sorted((label[u], label[v]))) for u, v in g.edges)
    body = ";".join(f"{u},{v}" for u, v in relabeled)
    return f"{n}|{body}".encode()


# Constructors for the named families used throughout tests and the CLI.

def path_graph(m: int) -> Multigraph:
    return Multigraph(m + 1, tuple((i, i + 1) for i in range(m)))


def star_graph(m: int) -> Multigraph:
    return Multigraph(m + 1, tuple((0, i + 1) for i in range(m)))


def cycle_graph(n: int) -> Multigraph:
    return multicycle_graph([1] * n)


def multitree_graph(multiplicities: Sequence[int]) -> Multigraph:
    """A path whose i-th link carries ``multiplicities[i]`` parallel edges."""
    edges = []
    for i, a in enumerate(multiplicities):
        edges += [(i, i + 1)] * a
    return Multigraph(len(multiplicities) + 1, tuple(edges))


def multicycle_graph(multiplicities: Sequence[int]) -> Multigraph:
    """Cycle on ``len(multiplicities)`` nodes; one node means a bouquet of loops."""
    n = len(multiplicities)
    if n == 0:
        raise ValueError("multicycle needs at least one edge class")
    edges = []
    for i, a in enumerate(multiplicities):
        edges += [(i, (i + 1) % n)] * a
    return Multigraph(n, tuple(edges))


def theta_graph(a: int, b: int, c: int) -> Multigraph:
    """Three internally disjoint paths of lengths a, b, c between nodes 0 and 1."""
    edges = []
    nxt = 2
    for length in (a, b, c):
        if length < 1:
            raise ValueError("theta path lengths must be positive")
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Multigraph(nxt, tuple(edges))


def k2n_graph(n: int) -> Multigraph:
    edges = []
    for i in range(n):
        edges += [(0, 2 + i), (1, 2 + i)]
    return Multigraph(n + 2, tuple(edges))
