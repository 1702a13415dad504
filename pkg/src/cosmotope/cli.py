"""``cosmotope`` command line interface.

Exit codes: 0 success, 1 a cross-check or verification failed, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from . import hstar as hs
from .multigraph import (
    GraphParseError,
    Multigraph,
    SubsetLimitError,
    k2n_graph,
    multicycle_graph,
    multitree_graph,
    parse_graph,
    theta_graph,
)
from .polynomials import bivar_to_json, render_bivar, render_latex, render_text, to_json
from .tutte import count_acyclic_via_tutte, tutte_delcon, tutte_subset_expansion

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read_graph(path: str) -> Multigraph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphParseError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _poly(p, args) -> str:
    return render_latex(p) if args.latex else render_text(p)


def _int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None
    if not vals or min(vals) < 1:
        raise UsageError("multiplicities must be positive integers")
    return vals


def cmd_hstar(args, out) -> int:
    g = _read_graph(args.graph)
    methods = hs.METHODS if args.method == "all" else (args.method,)
    results = {}
    for method in methods:
        results[method] = hs.compute_hstar(g, method, limit=args.limit_subsets).polynomial
    agree = len(set(results.values())) == 1
    if args.json:
        first = next(iter(results.values()))
        out.write(render_json({
            "hstar": {k: to_json(v) for k, v in results.items()},
            "volume": str(sum(first.coeffs)),
            "agree": agree,
        }))
    elif len(results) == 1:
        out.write(_poly(next(iter(results.values())), args) + "\n")
    else:
        for k, v in results.items():
            out.write(f"{k}: {_poly(v, args)}\n")
    if not agree:
        print("error: methods disagree", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_tutte(args, out) -> int:
    g = _read_graph(args.graph)
    t = tutte_delcon(g)
    status = EXIT_OK
    if args.brute_force:
        if tutte_subset_expansion(g) != t:
            print("error: deletion-contraction and subset expansion disagree", file=sys.stderr)
            status = EXIT_FAIL
    if args.json:
        out.write(render_json({"tutte": bivar_to_json(t), "acyclic_subsets": str(t.evaluate(2, 1))}))
    else:
        out.write(render_bivar(t) + "\n")
    return status


def cmd_volume(args, out) -> int:
    g = _read_graph(args.graph)
    vol = hs.volume(g)
    if args.json:
        out.write(render_json({"volume": str(vol), "acyclic_subsets": str(count_acyclic_via_tutte(g))}))
    else:
        out.write(f"{vol}\n")
    return EXIT_OK


def _triangulate(g, seed):
    from .polytope import placing_triangulation
    from .polytope.triangulation import random_insertion_order

    order = None if seed is None else random_insertion_order(g, random.Random(seed))
    return placing_triangulation(g, order)


def _triangulation_payload(t) -> dict:
    from .polytope import h_vector_from_triangulation

    return {
        "cells": [t.cell_labels(c) for c in range(len(t.cells))],
        "h_vector": to_json(h_vector_from_triangulation(t)),
        "dual_edges": [[str(a), str(b)] for a, b in t.dual_edges()],
    }


def cmd_triangulate(args, out) -> int:
    from .polytope import h_vector_from_triangulation

    g = _read_graph(args.graph)
    t = _triangulate(g, args.seed)
    if args.json:
        out.write(render_json(_triangulation_payload(t)))
        return EXIT_OK
    out.write(f"cells: {len(t.cells)}\n")
    out.write(f"h_vector: {_poly(h_vector_from_triangulation(t), args)}\n")
    for c in range(len(t.cells)):
        out.write(f"{c}: {' '.join(t.cell_labels(c))}\n")
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    from .polytope import decorations, half_open_decomposition

    g = _read_graph(args.graph)
    t = _triangulate(g, args.seed)
    decomp = half_open_decomposition(t)
    mismatched = [c for c, (hc, dec) in enumerate(zip(decomp.cells, decorations(t))) if hc.size != dec.k]
    if args.json:
        payload = _triangulation_payload(t)
        payload["removed"] = [[list(f) for f in hc.removed_facets] for hc in decomp.cells]
        payload["visibility_point"] = [str(x) for x in decomp.point]
        out.write(render_json(payload))
    else:
        out.write(f"cells: {len(t.cells)}\n")
        out.write(f"h_vector: {_poly(decomp.h_vector(), args)}\n")
        out.write(f"visibility_point: {' '.join(str(x) for x in decomp.point)}\n")
        for c, hc in enumerate(decomp.cells):
            drop = ", ".join("-" + p for p in hc.removed_opposite) or "closed"
            out.write(f"{c}: {' '.join(hc.cell)} | removed facets opposite: {drop}\n")
    if mismatched:
        print(f"error: removed-facet count differs from k(S) in cells {mismatched}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_ehrhart(args, out) -> int:
    from .polytope import ehrhart_brute, ehrhart_from_halfopen, ehrhart_from_hstar, half_open_decomposition

    g = _read_graph(args.graph)
    if g.n == 0:
        raise UsageError("graph must have at least one node")
    d = g.n + g.m - 1
    top = args.dilations if args.dilations is not None else d + 1
    h = hs.hstar_delcon(g)
    js = list(range(top + 1))
    columns = {"hstar": [ehrhart_from_hstar(h, d, j) for j in js]}
    if args.brute_force:
        decomp = half_open_decomposition(_triangulate(g, None))
        columns["halfopen"] = [ehrhart_from_halfopen(decomp, j, d) for j in js]
        columns["brute"] = [ehrhart_brute(g, j) for j in js]
    agree = all(col == columns["hstar"] for col in columns.values())
    if args.json:
        payload = {"dimension": str(d), "dilations": [str(j) for j in js]}
        payload.update({k: [str(x) for x in v] for k, v in columns.items()})
        payload["agree"] = agree
        out.write(render_json(payload))
    else:
        out.write("j " + " ".join(columns) + "\n")
        for i, j in enumerate(js):
            out.write(f"{j} " + " ".join(str(col[i]) for col in columns.values()) + "\n")
    if not agree:
        print("error: lattice point counts disagree", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_family(args, out) -> int:
    kind, params = args.kind, args.params
    if kind in ("multitree", "multicycle"):
        if len(params) != 1:
            raise UsageError(f"{kind} takes one comma-separated list, e.g. 2,1,3")
        mult = _int_list(params[0])
        if kind == "multitree":
            poly, g = hs.closed_form_multitree(mult), multitree_graph(mult)
        else:
            poly, g = hs.closed_form_multicycle(mult), multicycle_graph(mult)
    elif kind == "theta":
        if len(params) != 3:
            raise UsageError("theta takes three path lengths a b c")
        a, b, c = (_int_list(p)[0] for p in params)
        poly, g = hs.closed_form_theta(a, b, c), theta_graph(a, b, c)
    else:
        if len(params) != 1:
            raise UsageError("k2n takes one integer n")
        (n,) = _int_list(params[0])
        poly, g = hs.closed_form_k2n(n), k2n_graph(n)

    status = EXIT_OK
    try:
        direct = hs.hstar_acyclic(g, limit=args.limit_subsets)
    except SubsetLimitError as exc:
        print(f"warning: cross-check skipped ({exc})", file=sys.stderr)
        direct = None
    if direct is not None and direct != poly:
        print(f"error: closed form {render_text(poly)} != acyclic-sum {render_text(direct)}", file=sys.stderr)
        status = EXIT_FAIL
    vol = sum(poly.coeffs)
    if kind == "k2n" and vol != hs.k2n_volume(n):
        print("error: volume differs from (1 + n/3) 12^n", file=sys.stderr)
        status = EXIT_FAIL

    if args.json:
        out.write(render_json({
            "family": kind,
            "graph": {"nodes": str(g.n), "edges": [[str(u), str(v)] for u, v in g.edges]},
            "hstar": to_json(poly),
            "volume": str(vol),
            "cross_checked": direct is not None,
        }))
    elif args.volume:
        out.write(f"{vol}\n")
    else:
        out.write(_poly(poly, args) + "\n")
    return status


def cmd_verify(args, out) -> int:
    from .verify import run_suite

    g = _read_graph(args.graph)
    if g.n == 0:
        raise UsageError("graph must have at least one node")
    checks = run_suite(
        g,
        seed=args.seed if args.seed is not None else 0,
        orders=args.orders,
        brute_force=args.brute_force,
        dilations=args.dilations,
    )
    failed = [c for c in checks if c.status == "FAIL"]
    if args.json:
        out.write(render_json({
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks],
            "passed": not failed,
        }))
    else:
        for c in checks:
            out.write(c.line() + "\n")
        out.write(f"{len(checks) - len(failed)}/{len(checks)} checks without failure\n")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON (numbers as decimal strings)")
    common.add_argument("--latex", action="store_true", help="render polynomials as LaTeX")
    common.add_argument("--limit-subsets", type=int, default=hs.DEFAULT_SUBSET_LIMIT, metavar="N",
                        help="max edge subsets enumerated by subset-sum pipelines")

    parser = argparse.ArgumentParser(
        prog="cosmotope",
        description="h*-polynomials, volumes and triangulations of cosmological polytopes of multigraphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hstar", parents=[common], help="h*-polynomial")
    p.add_argument("graph")
    p.add_argument("--method", choices=hs.METHODS + ("all",), default="delcon")
    p.set_defaults(func=cmd_hstar)

    p = sub.add_parser("tutte", parents=[common], help="Tutte polynomial")
    p.add_argument("graph")
    p.add_argument("--brute-force", action="store_true", help="cross-check against subset expansion")
    p.set_defaults(func=cmd_tutte)

    p = sub.add_parser("volume", parents=[common], help="normalized volume 2^m T(2,1)")
    p.add_argument("graph")
    p.set_defaults(func=cmd_volume)

    for name, func, text in (
        ("triangulate", cmd_triangulate, "good placing triangulation"),
        ("decompose", cmd_decompose, "half-open decomposition"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("graph")
        p.add_argument("--seed", type=int, default=None, help="shuffle the insertion order with this seed")
        p.set_defaults(func=func)

    p = sub.add_parser("ehrhart", parents=[common], help="lattice points in dilations")
    p.add_argument("graph")
    p.add_argument("--dilations", type=int, default=None, metavar="K", help="count dilations 0..K (default d+1)")
    p.add_argument("--brute-force", action="store_true", help="also count via half-open cells and LP membership")
    p.set_defaults(func=cmd_ehrhart)

    p = sub.add_parser("family", parents=[common], help="closed forms: multitree, multicycle, theta, k2n")
    p.add_argument("kind", choices=("multitree", "multicycle", "theta", "k2n"))
    p.add_argument("params", nargs="+")
    p.add_argument("--volume", action="store_true", help="print only the volume")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", parents=[common], help="run the full invariant suite on a graph")
    p.add_argument("graph")
    p.add_argument("--seed", type=int, default=None, help="seed for random insertion orders (default 0)")
    p.add_argument("--orders", type=int, default=10, help="number of random insertion orders")
    p.add_argument("--brute-force", action="store_true", help="include the brute-force Ehrhart oracle")
    p.add_argument("--dilations", type=int, default=None, metavar="K", help="brute-force dilations 1..K")
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SubsetLimitError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
