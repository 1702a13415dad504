from math import comb

import pytest

from cosmotope.hstar import hstar_delcon
from cosmotope.polynomials import IntPolynomial as P
from cosmotope.polytope import (
    ehrhart_brute,
    ehrhart_from_halfopen,
    ehrhart_from_hstar,
    half_open_decomposition,
    lattice_points,
    placing_triangulation,
)
from cosmotope.polytope.ehrhart import BruteForceLimitError, box_points

from conftest import PATH2, SINGLE_EDGE, SINGLE_LOOP, TWO_PARALLEL


def test_from_hstar_examples():
    assert ehrhart_from_hstar(P([1, 3]), 2, 3) == comb(5, 2) + 3 * comb(4, 2) == 28
    assert ehrhart_from_hstar(P([1, 6, 5]), 3, 1) == 10
    for h in (P([1, 3]), P([1, 6, 5]), P([1, 9, 27, 19])):
        assert ehrhart_from_hstar(h, 4, 0) == 1


def test_leading_coefficient_is_volume():
    # L(j) ~ vol / d! * j^d, so the d-th finite difference equals the volume
    h, d = P([1, 6, 5]), 3
    vals = [ehrhart_from_hstar(h, d, j) for j in range(d + 1)]
    for _ in range(d):
        vals = [b - a for a, b in zip(vals, vals[1:])]
    assert vals == [12]


def test_from_halfopen_examples():
    edge = half_open_decomposition(placing_triangulation(SINGLE_EDGE))
    assert ehrhart_from_halfopen(edge, 1) == comb(3, 2) + 3 * comb(2, 2) == 6
    par = half_open_decomposition(placing_triangulation(TWO_PARALLEL))
    assert ehrhart_from_halfopen(par, 1) == 10 == len(lattice_points(TWO_PARALLEL))
    assert ehrhart_from_halfopen(par, 0) == ehrhart_from_halfopen(edge, 0) == 1


def test_halfopen_matches_hstar(suite_graph):
    g = suite_graph
    decomp = half_open_decomposition(placing_triangulation(g))
    d = g.n + g.m - 1
    h = hstar_delcon(g)
    for j in range(d + 2):
        assert ehrhart_from_halfopen(decomp, j, d) == ehrhart_from_hstar(h, d, j)


@pytest.mark.parametrize(
    "g, expected",
    [(SINGLE_EDGE, [6, 15, 28]), (SINGLE_LOOP, [3, 5, 7]), (TWO_PARALLEL, [10, 39, 100])],
    ids=["edge", "loop", "parallel"],
)
def test_brute_force_counts(g, expected):
    d = g.n + g.m - 1
    h = hstar_delcon(g)
    assert [ehrhart_from_hstar(h, d, j) for j in (1, 2, 3)] == expected
    assert [ehrhart_brute(g, j) for j in (1, 2, 3)] == expected
    assert ehrhart_brute(g, 0) == 1


@pytest.mark.parametrize("g", [SINGLE_EDGE, SINGLE_LOOP, TWO_PARALLEL], ids=["edge", "loop", "parallel"])
def test_backends_agree(g):
    for j in (1, 2):
        assert ehrhart_brute(g, j, backend="triangulation") == ehrhart_brute(g, j, backend="lp")


def test_dilation_one_counts_lattice_points():
    assert ehrhart_brute(PATH2, 1) == len(lattice_points(PATH2)) == 11


def test_box_contains_dilated_vertices():
    for g in (SINGLE_EDGE, SINGLE_LOOP, TWO_PARALLEL):
        for j in (1, 2):
            box = set(box_points(g, j))
            assert all(tuple(j * c for c in p.coords) in box for p in lattice_points(g))


def test_limits_and_errors():
    with pytest.raises(BruteForceLimitError):
        ehrhart_brute(PATH2, 5)
    with pytest.raises(BruteForceLimitError):
        ehrhart_brute(PATH2, 1, max_dim=4)
    with pytest.raises(ValueError):
        ehrhart_brute(SINGLE_EDGE, 1, backend="simplex")
    with pytest.raises(ValueError):
        ehrhart_brute(SINGLE_EDGE, -1)
