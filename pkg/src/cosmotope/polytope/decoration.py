"""Decorated graphs read off maximal cells, and the cell/decoration bijection."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from ..geometry import SingularError, solve
from ..multigraph import Multigraph, UnionFind, enumerate_acyclic_subsets
from ..polynomials import IntPolynomial
from .points import EDGE, LEFT, NODE, RIGHT, SQUIGGLE, parse_label
from .triangulation import Triangulation, TriangulationError

SQUIGGLY = "squiggly"
SELECTED = "selected"
LEFT_ONLY = "left"
RIGHT_ONLY = "right"
DOUBLE_LEFT = "double-left"
DOUBLE_RIGHT = "double-right"

_STATUS = {
    frozenset({SQUIGGLE}): SQUIGGLY,
    frozenset({EDGE}): SELECTED,
    frozenset({LEFT}): LEFT_ONLY,
    frozenset({RIGHT}): RIGHT_ONLY,
    frozenset({EDGE, LEFT}): DOUBLE_LEFT,
    frozenset({EDGE, RIGHT}): DOUBLE_RIGHT,
}


@dataclass(frozen=True)
class Decoration:
    selected_nodes: frozenset[int]
    status: tuple[str, ...]
    graph: Multigraph = field(repr=False, compare=False)

    @property
    def squiggly(self) -> frozenset[int]:
        return frozenset(f for f, s in enumerate(self.status) if s == SQUIGGLY)

    @property
    def double_edges(self) -> frozenset[int]:
        return frozenset(f for f, s in enumerate(self.status) if s in (DOUBLE_LEFT, DOUBLE_RIGHT))

    @property
    def k(self) -> int:
        """Number of squiggly plus double edges."""
        return len(self.squiggly) + len(self.double_edges)

    def key(self) -> tuple[frozenset[int], frozenset[tuple[int, str]]]:
        """The squiggle set and the oriented double-edge set; determines the cell."""
        doubles = frozenset(
            (f, "left" if s == DOUBLE_LEFT else "right")
            for f, s in enumerate(self.status)
            if s in (DOUBLE_LEFT, DOUBLE_RIGHT)
        )
        return self.squiggly, doubles


def decoration_of(g: Multigraph, labels: Iterable[str]) -> Decoration:
    """Classify every edge of a maximal cell and check the decoration invariants.

    Raises :class:`TriangulationError` if the cell cannot come from a good
    triangulation: an edge with an impossible combination of points, a cycle
    of double edges, a double-edge component without exactly one selected
    node, or a wrong selected-node count.
    """
    selected = set()
    per_edge: list[set[str]] = [set() for _ in range(g.m)]
    for label in labels:
        kind, idx = parse_label(label)
        if kind == NODE:
            selected.add(idx)
        else:
            per_edge[idx].add(kind)
    status = []
    for f, kinds in enumerate(per_edge):
        s = _STATUS.get(frozenset(kinds))
        if s is None:
            raise TriangulationError(f"edge {f} carries points {sorted(kinds)}")
        status.append(s)
    dec = Decoration(frozenset(selected), tuple(status), g)

    uf = UnionFind(g.n)
    for f in sorted(dec.double_edges):
        u, v = g.edges[f]
        if not uf.union(u, v):
            raise TriangulationError(f"double edges contain a cycle through edge {f}")
    per_component: dict[int, int] = {}
    for u in selected:
        root = uf.find(u)
        per_component[root] = per_component.get(root, 0) + 1
    for u in range(g.n):
        if per_component.get(uf.find(u), 0) != 1:
            raise TriangulationError(f"double-edge component of node {u} lacks a unique selected node")
    if len(selected) != g.n - len(dec.double_edges):
        raise TriangulationError("selected node count differs from n - |D|")
    return dec


def decorations(t: Triangulation) -> list[Decoration]:
    return [decoration_of(t.graph, t.cell_labels(c)) for c in range(len(t.cells))]


def h_vector_from_triangulation(t: Triangulation) -> IntPolynomial:
    """Histogram of ``k(S)`` over the maximal cells."""
    counts = [0] * (t.graph.m + 1)
    for dec in decorations(t):
        counts[dec.k] += 1
    return IntPolynomial(counts)


@dataclass
class BijectionReport:
    ok: bool
    cells: int
    expected: int
    problems: list[str]


def verify_main_bijection(t: Triangulation) -> BijectionReport:
    """Check cell -> (squiggles, oriented doubles) hits every admissible pair exactly once.

    Admissible: doubles ``H`` acyclic and loop-free, squiggles ``Q`` disjoint
    from ``H``, any orientation. There are ``2**m`` such pairs per acyclic
    ``H``, so injectivity plus admissibility plus the count gives bijectivity.
    """
    g = t.graph
    problems = []
    seen: dict[tuple, int] = {}
    for c in range(len(t.cells)):
        try:
            dec = decoration_of(g, t.cell_labels(c))
        except TriangulationError as exc:
            problems.append(f"cell {c}: {exc}")
            continue
        key = dec.key()
        q, doubles = key
        h = {f for f, _ in doubles}
        if q & h:
            problems.append(f"cell {c}: edge both squiggly and double")
        if any(g.edges[f][0] == g.edges[f][1] for f in h):
            problems.append(f"cell {c}: loop used as double edge")
        if key in seen:
            problems.append(f"cells {seen[key]} and {c} share decoration {_fmt_key(key)}")
        seen[key] = c
    expected = 2**g.m * sum(1 for _ in enumerate_acyclic_subsets(g))
    if len(seen) != expected:
        problems.append(f"{len(seen)} distinct decorations, expected {expected}")
    return BijectionReport(not problems, len(t.cells), expected, problems)


def _fmt_key(key) -> str:
    q, doubles = key
    return f"squiggly={sorted(q)} doubles={sorted(doubles)}"


def affine_coordinates(g: Multigraph, labels: Iterable[str], w: int) -> dict[str, Fraction]:
    """Solve ``e_w = sum lam_u e_u + sum lam_f (e_tail - e_head)`` over ``u`` selected, ``f`` double.

    Keys are ``"v:<u>"`` and ``"e:<f>"``.
    """
    dec = decoration_of(g, labels)
    nodes = sorted(dec.selected_nodes)
    doubles = sorted(dec.double_edges)
    columns = []
    for u in nodes:
        col = [0] * g.n
        col[u] = 1
        columns.append(col)
    for f in doubles:
        tail, head = g.edges[f]
        col = [0] * g.n
        col[tail] += 1
        col[head] -= 1
        columns.append(col)
    target = [int(u == w) for u in range(g.n)]
    try:
        sol = solve(columns, target)
    except (SingularError, ValueError) as exc:
        raise TriangulationError(f"affine coordinates undefined: {exc}") from None
    keys = [f"v:{u}" for u in nodes] + [f"e:{f}" for f in doubles]
    return dict(zip(keys, sol))
