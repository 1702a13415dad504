"""Per-graph invariant suite behind ``cosmotope verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from .hstar import FORMULA_METHODS, PIPELINES, ONE_PLUS_3Z, volume
from .multigraph import (
    Multigraph,
    component_count,
    disjoint_union,
    enumerate_acyclic_subsets,
    enumerate_bridge_free_subsets,
    is_acyclic,
    is_bridge_free,
)
from .polynomials import check_coefficient_bound, check_ultra_log_concave, eval_at_one
from .tutte import tutte_delcon, tutte_subset_expansion

MAX_GEOMETRY_DIM = 9
MAX_EXHAUSTIVE_EDGES = 14


@dataclass
class Check:
    name: str
    status: str  # PASS, FAIL or SKIP
    detail: str = ""

    def line(self) -> str:
        return f"{self.status} {self.name}" + (f": {self.detail}" if self.detail else "")


def is_forest(g: Multigraph) -> bool:
    return is_acyclic(g, g.full_mask)


def run_suite(
    g: Multigraph,
    seed: int = 0,
    orders: int = 10,
    brute_force: bool = False,
    dilations: int | None = None,
    max_geometry_dim: int = MAX_GEOMETRY_DIM,
) -> list[Check]:
    checks: list[Check] = []

    def check(name: str, fn: Callable[[], tuple[bool, str] | bool]) -> None:
        try:
            res = fn()
        except Exception as exc:  # report, do not abort the suite
            checks.append(Check(name, "FAIL", f"{type(exc).__name__}: {exc}"))
            return
        ok, detail = res if isinstance(res, tuple) else (res, "")
        checks.append(Check(name, "PASS" if ok else "FAIL", detail))

    def skip(name: str, why: str) -> None:
        checks.append(Check(name, "SKIP", why))

    m = g.m
    exhaustive = m <= MAX_EXHAUSTIVE_EDGES

    if exhaustive:
        check("multigraph.acyclic_rank_identity", lambda: all(
            is_acyclic(g, h) == (h.bit_count() == g.n - component_count(g, h)) for h in range(1 << m)))
        check("multigraph.bridge_free_closure", lambda: all(
            is_bridge_free(g, h) and all(
                component_count(g, h & ~(1 << f)) == component_count(g, h) for f in range(m) if (h >> f) & 1)
            for h in enumerate_bridge_free_subsets(g)))
    else:
        skip("multigraph.acyclic_rank_identity", f"m={m} > {MAX_EXHAUSTIVE_EDGES}")
        skip("multigraph.bridge_free_closure", f"m={m} > {MAX_EXHAUSTIVE_EDGES}")

    tutte = tutte_delcon(g)
    t21 = tutte.evaluate(2, 1)
    check("tutte.acyclic_count", lambda: (
        sum(1 for _ in enumerate_acyclic_subsets(g)) == t21, f"T(2,1)={t21}"))
    if exhaustive:
        check("tutte.delcon_equals_subset_expansion", lambda: tutte_subset_expansion(g) == tutte)
    else:
        skip("tutte.delcon_equals_subset_expansion", f"m={m} > {MAX_EXHAUSTIVE_EDGES}")

    results = {}
    for method in FORMULA_METHODS:
        try:
            results[method] = PIPELINES[method](g)
        except Exception as exc:
            checks.append(Check(f"hstar.{method}", "FAIL", str(exc)))
    ref = results.get("delcon")
    check("hstar.four_way_agreement", lambda: (
        len(set(results.values())) == 1 and len(results) == len(FORMULA_METHODS),
        "; ".join(f"{k}={v}" for k, v in results.items())))
    if ref is None:
        return checks

    loops = g.loop_count()
    vol = volume(g)
    check("hstar.shape", lambda: (
        ref.degree <= m and ref[0] == 1 and all(c >= 0 for c in ref.coeffs), str(ref)))
    check("hstar.linear_coefficient", lambda: (ref[1] == 3 * m - 2 * loops, f"h1={ref[1]}, 3m-2loops={3 * m - 2 * loops}"))
    check("hstar.ultra_log_concave", lambda: check_ultra_log_concave(ref, m)[0])
    check("hstar.coefficient_bound", lambda: check_coefficient_bound(ref, m))
    check("hstar.forest_bound_equality", lambda: (ref == ONE_PLUS_3Z**m) == is_forest(g))
    check("hstar.volume", lambda: (eval_at_one(ref) == vol == 2**m * t21, f"volume={vol}"))
    check("hstar.volume_bounds", lambda: 2**m <= vol <= 4**m and ((vol == 4**m) == is_forest(g)))
    check("hstar.isolated_node_invariance", lambda: PIPELINES["delcon"](disjoint_union(g, Multigraph(2))) == ref)

    if g.n + m > max_geometry_dim:
        skip("geometry", f"n+m={g.n + m} > {max_geometry_dim}")
        return checks
    _geometry_checks(g, ref, seed, orders, brute_force, dilations, check)
    return checks


def _geometry_checks(g, ref, seed, orders, brute_force, dilations, check):
    from .polytope import (
        affine_coordinates,
        decorations,
        ehrhart_brute,
        ehrhart_from_halfopen,
        ehrhart_from_hstar,
        h_vector_from_triangulation,
        half_open_decomposition,
        placing_triangulation,
        verify_main_bijection,
    )
    from .polytope.points import EDGE, LEFT, RIGHT, SQUIGGLE, lattice_points, parse_label
    from .polytope.triangulation import random_insertion_order

    m = g.m
    d = g.n + m - 1
    check("polytope.lattice_point_count", lambda: len(lattice_points(g)) == g.n + 4 * m - 2 * g.loop_count())

    rng = random.Random(seed)
    plans = [("default", None)] + [
        (f"random#{i + 1}", random_insertion_order(g, rng)) for i in range(orders)
    ]
    default_t = None
    for tag, order in plans:
        t = placing_triangulation(g, order)
        if default_t is None:
            default_t = t
        expected = 2**m * sum(1 for _ in enumerate_acyclic_subsets(g))

        def cells_ok(t=t, expected=expected):
            dets = t.determinants()
            return (len(t.cells) == expected and all(abs(x) == 1 for x in dets),
                    f"{len(t.cells)} cells, expected {expected}")

        def good(t=t):
            if t.standard_cell() not in t.cells:
                return False, "standard simplex missing"
            for c in range(len(t.cells)):
                kinds: dict[int, set] = {}
                for label in t.cell_labels(c):
                    kind, idx = parse_label(label)
                    if kind != "v":
                        kinds.setdefault(idx, set()).add(kind)
                for f, ks in kinds.items():
                    if SQUIGGLE in ks and ks & {EDGE, LEFT, RIGHT}:
                        return False, f"cell {c} mixes squiggle with edge {f}"
            return True, ""

        def bijection(t=t):
            rep = verify_main_bijection(t)
            return rep.ok, "; ".join(rep.problems[:3])

        check(f"polytope.unimodular_cells[{tag}]", cells_ok)
        check(f"polytope.good[{tag}]", good)
        check(f"polytope.decoration_bijection[{tag}]", bijection)
        check(f"polytope.h_vector_matches_formulas[{tag}]", lambda t=t: (
            h_vector_from_triangulation(t) == ref, str(h_vector_from_triangulation(t))))

    t = default_t

    def affine_ok():
        for c in range(len(t.cells)):
            labels = t.cell_labels(c)
            for w in range(g.n):
                if any(v not in (-1, 0, 1) for v in affine_coordinates(g, labels, w).values()):
                    return False, f"cell {c}, node {w}"
        return True, ""

    check("polytope.affine_coordinates_unit", affine_ok)

    decomp = half_open_decomposition(t)
    decs = decorations(t)
    check("halfopen.removed_equals_k", lambda: (
        all(hc.size == dec.k for hc, dec in zip(decomp.cells, decs)), f"delta={decomp.delta}"))
    check("halfopen.standard_simplex_closed", lambda: all(
        hc.size == 0 for hc, cell in zip(decomp.cells, t.cells) if cell == t.standard_cell()))
    check("halfopen.ehrhart_cover", lambda: all(
        ehrhart_from_halfopen(decomp, j, d) == ehrhart_from_hstar(ref, d, j) for j in range(d + 2)))
    if brute_force:
        top = dilations if dilations is not None else 3

        def brute():
            got = [ehrhart_brute(g, j) for j in range(1, top + 1)]
            want = [ehrhart_from_hstar(ref, d, j) for j in range(1, top + 1)]
            return got == want, f"brute={got} hstar={want}"

        check("ehrhart.brute_force", brute)
