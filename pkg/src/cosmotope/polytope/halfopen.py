"""Half-open decomposition of a good triangulation by a generic visibility point.

For the point ``q* = (1 - delta) q + delta b`` (``q`` the centroid of the node
units, ``b`` the barycenter of the standard simplex), a cell drops exactly the
facets whose hyperplane separates it from ``q*``: those opposite a vertex where
the barycentric coordinate of ``q*`` is negative.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..polynomials import IntPolynomial
from .points import label_sort_key
from .triangulation import Triangulation, TriangulationError

MAX_RETRIES = 64


@dataclass(frozen=True)
class HalfOpenCell:
    cell: tuple[str, ...]
    removed_opposite: tuple[str, ...]

    @property
    def removed_facets(self) -> list[tuple[str, ...]]:
        """Each removed facet as the cell minus one vertex."""
        return [tuple(x for x in self.cell if x != p) for p in self.removed_opposite]

    @property
    def size(self) -> int:
        return len(self.removed_opposite)


@dataclass
class HalfOpenDecomposition:
    triangulation: Triangulation
    cells: list[HalfOpenCell]
    point: tuple[Fraction, ...]
    delta: Fraction

    def h_vector(self) -> IntPolynomial:
        counts = [0] * (self.triangulation.graph.m + 1)
        for hc in self.cells:
            counts[hc.size] += 1
        return IntPolynomial(counts)


def visibility_point(n: int, m: int, delta: Fraction) -> tuple[Fraction, ...]:
    d = n + m
    q_node = Fraction(1, n)
    bary = Fraction(1, d)
    return tuple([(1 - delta) * q_node + delta * bary] * n + [delta * bary] * m)


def half_open_decomposition(t: Triangulation) -> HalfOpenDecomposition:
    g = t.graph
    delta = Fraction(1, 8 * (g.n + g.m))
    for _ in range(MAX_RETRIES):
        point = visibility_point(g.n, g.m, delta)
        cells = _classify(t, point)
        if cells is not None:
            return HalfOpenDecomposition(t, cells, point, delta)
        delta /= 2
    raise TriangulationError("no generic visibility point found")


def _classify(t: Triangulation, point) -> list[HalfOpenCell] | None:
    out = []
    for c in range(len(t.cells)):
        coords = t.barycentric(c, point)
        if any(x == 0 for x in coords):
            return None
        verts = t.cell_vertices(c)
        removed = sorted((t.points[verts[k]].label for k, x in enumerate(coords) if x < 0), key=label_sort_key)
        out.append(HalfOpenCell(tuple(t.cell_labels(c)), tuple(removed)))
    return out
