"""Lattice points of the cosmological polytope.

Coordinates live in ``R^n x R^m``: node ``u`` is coordinate ``u`` and edge
``f`` is coordinate ``n + f``. For an edge ``f = (u, v)`` (tail, head):

=========  ==================  ===========
kind       vector              label
=========  ==================  ===========
node unit  e_u                 ``v:<u>``
edge unit  e_f                 ``e:<f>``
squiggle   e_u + e_v - e_f     ``sq:<f>``
left       e_u - e_v + e_f     ``la:<f>``
right      -e_u + e_v + e_f    ``ra:<f>``
=========  ==================  ===========

For a loop both arrows equal ``e_f`` and are not stored separately.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..multigraph import Multigraph

NODE, EDGE, SQUIGGLE, LEFT, RIGHT = "v", "e", "sq", "la", "ra"
KIND_ORDER = {NODE: 0, EDGE: 1, SQUIGGLE: 2, LEFT: 3, RIGHT: 4}


@dataclass(frozen=True)
class LatticePoint:
    kind: str
    index: int
    coords: tuple[int, ...] = field(compare=False, repr=False)

    @property
    def label(self) -> str:
        return f"{self.kind}:{self.index}"

    @property
    def sort_key(self) -> tuple[int, int]:
        return KIND_ORDER[self.kind], self.index


def parse_label(label: str) -> tuple[str, int]:
    kind, _, idx = label.partition(":")
    if kind not in KIND_ORDER or not idx.isdigit():
        raise ValueError(f"bad lattice point label {label!r}")
    return kind, int(idx)


def label_sort_key(label: str) -> tuple[int, int]:
    kind, idx = parse_label(label)
    return KIND_ORDER[kind], idx


def point_vector(g: Multigraph, kind: str, index: int) -> tuple[int, ...]:
    n = g.n
    x = [0] * (n + g.m)
    if kind == NODE:
        x[index] = 1
        return tuple(x)
    u, v = g.edges[index]
    f = n + index
    if kind == EDGE:
        x[f] = 1
    elif kind == SQUIGGLE:
        x[u] += 1
        x[v] += 1
        x[f] = -1
    elif kind == LEFT:
        x[u] += 1
        x[v] -= 1
        x[f] = 1
    elif kind == RIGHT:
        x[u] -= 1
        x[v] += 1
        x[f] = 1
    else:
        raise ValueError(kind)
    return tuple(x)


def lattice_points(g: Multigraph) -> list[LatticePoint]:
    """All ``n + 4m - 2*loops`` lattice points, node units first, then per kind by edge index."""
    pts = [LatticePoint(NODE, u, point_vector(g, NODE, u)) for u in range(g.n)]
    for kind in (EDGE, SQUIGGLE, LEFT, RIGHT):
        for f, (u, v) in enumerate(g.edges):
            if u == v and kind in (LEFT, RIGHT):
                continue
            pts.append(LatticePoint(kind, f, point_vector(g, kind, f)))
    return pts


def default_insertion_order(g: Multigraph) -> list[str]:
    """Squiggles, then left arrows, then right arrows, each by edge index."""
    order = [f"{SQUIGGLE}:{f}" for f in range(g.m)]
    for kind in (LEFT, RIGHT):
        order += [f"{kind}:{f}" for f, (u, v) in enumerate(g.edges) if u != v]
    return order
