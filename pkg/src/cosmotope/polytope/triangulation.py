"""Placing triangulations of the cosmological polytope's lattice points."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..geometry import determinant, inverse
from ..multigraph import Multigraph
from .points import EDGE, NODE, LatticePoint, default_insertion_order, label_sort_key, lattice_points


class TriangulationError(RuntimeError):
    """An internal-consistency failure while building or reading a triangulation."""


def _integral(inv: list[list[Fraction]]):
    if all(x.denominator == 1 for row in inv for x in row):
        return [[int(x) for x in row] for row in inv]
    return inv


@dataclass
class Triangulation:
    """Maximal cells as frozensets of indices into ``points``.

    ``inverses[c]`` is the inverse of the matrix whose rows are the vertices of
    cell ``c`` in ``sorted(cells[c])`` order. Column ``k`` of it is the affine
    functional that is 1 on the ``k``-th vertex and 0 on the rest, so
    ``x @ inverse`` gives barycentric coordinates.
    """

    graph: Multigraph
    points: list[LatticePoint]
    cells: list[frozenset[int]]
    inverses: list[list[list]] = field(repr=False)
    order: list[str] = field(default_factory=list)

    @property
    def dim(self) -> int:
        """Dimension of the polytope, ``n + m - 1``."""
        return self.graph.n + self.graph.m - 1

    def index_of(self, label: str) -> int:
        for i, p in enumerate(self.points):
            if p.label == label:
                return i
        raise KeyError(label)

    def cell_vertices(self, c: int) -> list[int]:
        return sorted(self.cells[c])

    def cell_labels(self, c: int) -> list[str]:
        return sorted((self.points[i].label for i in self.cells[c]), key=label_sort_key)

    def cell_matrix(self, c: int) -> list[tuple[int, ...]]:
        return [self.points[i].coords for i in self.cell_vertices(c)]

    def standard_cell(self) -> frozenset[int]:
        return frozenset(i for i, p in enumerate(self.points) if p.kind in (NODE, EDGE))

    def barycentric(self, c: int, x: Sequence) -> list:
        inv = self.inverses[c]
        size = len(inv)
        out = [0] * size
        for i, xi in enumerate(x):
            if xi:
                row = inv[i]
                for k in range(size):
                    out[k] += xi * row[k]
        return out

    def dual_edges(self) -> list[tuple[int, int]]:
        """Pairs of cells sharing a facet, sorted."""
        owners: dict[frozenset[int], list[int]] = {}
        for c, cell in enumerate(self.cells):
            for p in cell:
                owners.setdefault(cell - {p}, []).append(c)
        pairs = []
        for cs in owners.values():
            if len(cs) > 2:
                raise TriangulationError("facet shared by more than two cells")
            if len(cs) == 2:
                pairs.append((min(cs), max(cs)))
        return sorted(pairs)

    def determinants(self) -> list[int]:
        return [determinant(self.cell_matrix(c)) for c in range(len(self.cells))]


def random_insertion_order(g: Multigraph, rng: random.Random) -> list[str]:
    order = default_insertion_order(g)
    rng.shuffle(order)
    return order


def placing_triangulation(g: Multigraph, order: Sequence[str] | None = None) -> Triangulation:
    """Place the standard simplex, then every other lattice point in ``order``.

    Each new point is coned over the boundary facets it strictly sees. A facet
    opposite vertex ``p`` of cell ``S`` is seen from ``x`` iff the barycentric
    coordinate of ``x`` at ``p`` is negative; by Cramer's rule that coordinate
    is ``det(S with p replaced by x) / det(S)``, i.e. the orientation test
    against the facet with ``p`` as interior reference.
    """
    if g.n == 0:
        raise ValueError("graph must have at least one node")
    points = lattice_points(g)
    by_label = {p.label: i for i, p in enumerate(points)}
    standard = frozenset(i for i, p in enumerate(points) if p.kind in (NODE, EDGE))
    if order is None:
        order = default_insertion_order(g)
    order = list(order)
    expected = set(by_label) - {points[i].label for i in standard}
    if sorted(order) != sorted(expected):
        raise ValueError("insertion order must list every non-standard lattice point exactly once")

    cells: list[frozenset[int]] = []
    inverses: list = []
    # boundary facet -> (cell id, position of the opposite vertex in sorted cell order)
    boundary: dict[frozenset[int], tuple[int, int]] = {}

    def add_cell(cell: frozenset[int]) -> None:
        verts = sorted(cell)
        try:
            inv = _integral(inverse([points[i].coords for i in verts]))
        except ArithmeticError:
            raise TriangulationError(f"degenerate cell {sorted(points[i].label for i in cell)}") from None
        cid = len(cells)
        cells.append(cell)
        inverses.append(inv)
        for k, p in enumerate(verts):
            facet = cell - {p}
            if facet in boundary:
                del boundary[facet]
            else:
                boundary[facet] = (cid, k)

    add_cell(standard)
    for label in order:
        x = by_label[label]
        coords = points[x].coords
        nz = [(i, v) for i, v in enumerate(coords) if v]
        visible = []
        for facet, (cid, k) in boundary.items():
            inv = inverses[cid]
            if sum(v * inv[i][k] for i, v in nz) < 0:
                visible.append(facet)
        if not visible:
            raise TriangulationError(f"point {label} sees no boundary facet")
        for facet in visible:
            # the facet becomes interior once the new cone is glued on
            add_cell(facet | {x})

    return Triangulation(g, points, cells, inverses, order)
