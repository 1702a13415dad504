"""Lattice-point counts of dilations, three ways."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import comb
from typing import Callable, Iterator

from ..geometry import lp_membership
from ..multigraph import Multigraph
from ..polynomials import IntPolynomial
from .halfopen import HalfOpenDecomposition
from .points import lattice_points
from .triangulation import Triangulation, placing_triangulation

MAX_BRUTE_DIM = 5
MAX_BRUTE_DILATION = 4


class BruteForceLimitError(RuntimeError):
    pass


def ehrhart_from_hstar(hstar: IntPolynomial, d: int, j: int) -> int:
    """``L(j) = sum_i h*_i C(j + d - i, d)``."""
    return sum(c * comb(j + d - i, d) for i, c in enumerate(hstar.coeffs) if j + d - i >= 0)


def ehrhart_from_halfopen(decomp: HalfOpenDecomposition, j: int, d: int | None = None) -> int:
    """Each unimodular half-open d-simplex missing ``k`` facets holds ``C(j + d - k, d)`` points of the j-th dilation."""
    if d is None:
        d = decomp.triangulation.dim
    return sum(comb(j + d - hc.size, d) for hc in decomp.cells if j + d - hc.size >= 0)


def triangulation_membership(t: Triangulation, x) -> bool:
    """``x`` lies in some cell iff all its barycentric coordinates there are non-negative."""
    return any(all(c >= 0 for c in t.barycentric(i, x)) for i in range(len(t.cells)))


def box_points(g: Multigraph, j: int) -> Iterator[tuple[int, ...]]:
    """Integer vectors with coordinate sum ``j``, node coordinates in ``[-j, 2j]``, edge coordinates in ``[-j, j]``.

    Vertices have node coordinates in ``{-1, 0, 1, 2}`` and edge coordinates in
    ``{-1, 0, 1}``, so this box contains the j-th dilation.
    """
    ranges = [range(-j, 2 * j + 1)] * g.n + [range(-j, j + 1)] * g.m
    *head, last = ranges
    for prefix in product(*head):
        rest = j - sum(prefix)
        if rest in last:
            yield prefix + (rest,)


def ehrhart_brute(
    g: Multigraph,
    j: int,
    backend: str = "lp",
    max_dim: int = MAX_BRUTE_DIM,
    max_dilation: int = MAX_BRUTE_DILATION,
) -> int:
    """Count lattice points of the j-th dilation by testing every point of a bounding box.

    ``backend`` is ``"lp"`` (exact simplex feasibility against the lattice
    points) or ``"triangulation"`` (barycentric coordinates in the placing
    triangulation's cells).
    """
    if g.n + g.m > max_dim or j > max_dilation:
        raise BruteForceLimitError(f"brute force limited to n+m <= {max_dim}, j <= {max_dilation}")
    if j < 0:
        raise ValueError("dilation must be non-negative")
    if j == 0:
        return 1
    member: Callable[[tuple], bool]
    if backend == "lp":
        gens = [p.coords for p in lattice_points(g)]
        member = lambda x: lp_membership([Fraction(v, j) for v in x], gens)  # noqa: E731
    elif backend == "triangulation":
        t = placing_triangulation(g)
        member = lambda x: triangulation_membership(t, [Fraction(v, j) for v in x])  # noqa: E731
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return sum(1 for x in box_points(g, j) if member(x))
