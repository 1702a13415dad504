"""Independent formulas for the h*-polynomial of a cosmological polytope.

All four graph pipelines (acyclic-subset sum, deletion-contraction, Tutte
specialization, Moebius inversion over bridge-free subsets) return exact
:class:`IntPolynomial` values and must agree on every graph. The closed forms
for multitrees, multicycles, theta graphs and ``K_{2,n}`` live here too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .multigraph import (
    Multigraph,
    SubsetLimitError,
    canonical_key,
    contract_edge,
    delete_edge,
    enumerate_acyclic_subsets,
    enumerate_bridge_free_subsets,
    rank,
    remove_isolated_nodes,
)
from .polynomials import IntPolynomial, eval_at_one
from .tutte import DEFAULT_CACHE_ENTRIES, count_acyclic_via_tutte, split_pivot, tutte_delcon

DEFAULT_SUBSET_LIMIT = 1 << 20

ONE = IntPolynomial.constant(1)
ONE_PLUS_Z = IntPolynomial.linear(1, 1)
ONE_PLUS_3Z = IntPolynomial.linear(1, 3)
TWO_Z = IntPolynomial.monomial(1, 2)

METHODS = ("acyclic", "delcon", "tutte", "moebius", "triangulation")
FORMULA_METHODS = METHODS[:4]


@dataclass(frozen=True)
class HstarReport:
    polynomial: IntPolynomial
    method: str
    m: int

    @property
    def volume(self) -> int:
        return eval_at_one(self.polynomial)

    @property
    def coefficients(self) -> list[int]:
        # zero-padded to degree m so coefficient checks can index 0..m
        return self.polynomial.padded(self.m)


def hstar_acyclic(g: Multigraph, limit: int = DEFAULT_SUBSET_LIMIT) -> IntPolynomial:
    """Sum of ``(2z)^|H| (1+z)^(m-|H|)`` over acyclic edge subsets ``H``."""
    m = g.m
    by_size = [0] * (m + 1)
    seen = 0
    for h in enumerate_acyclic_subsets(g):
        seen += 1
        if seen > limit:
            raise SubsetLimitError(f"more than {limit} acyclic subsets")
        by_size[h.bit_count()] += 1
    total = IntPolynomial()
    for k, count in enumerate(by_size):
        if count:
            total = total + (TWO_Z**k * ONE_PLUS_Z ** (m - k)).scale(count)
    return total


def hstar_delcon(g: Multigraph, max_cache: int = DEFAULT_CACHE_ENTRIES) -> IntPolynomial:
    """``(1+z) h*(G\\e) + 2z h*(G/e)`` on ordinary edges; loops give ``1+z``, bridges ``1+3z``."""
    cache: dict[bytes, IntPolynomial] = {}

    def rec(h: Multigraph) -> IntPolynomial:
        h = remove_isolated_nodes(h)
        key = canonical_key(h)
        hit = cache.get(key)
        if hit is not None:
            return hit
        pivot, loops, nbridges = split_pivot(h)
        if pivot is None:
            result = ONE_PLUS_Z**loops * ONE_PLUS_3Z**nbridges
        else:
            result = ONE_PLUS_Z * rec(delete_edge(h, pivot)) + TWO_Z * rec(contract_edge(h, pivot))
        if len(cache) < max_cache:
            cache[key] = result
        return result

    return rec(g)


def hstar_tutte(g: Multigraph) -> IntPolynomial:
    """``(1+z)^(m-r) (2z)^r T(x, 1)`` at ``x = (1+3z)/(2z)``, cleared of denominators.

    With ``T(x, 1) = sum c_k x^k`` (and ``k <= r``), this is
    ``(1+z)^(m-r) * sum c_k (1+3z)^k (2z)^(r-k)``.
    """
    r = rank(g)
    t_x1 = tutte_delcon(g).at_y_one()
    if t_x1.degree > r:
        raise AssertionError("Tutte x-degree exceeds graph rank")
    acc = IntPolynomial()
    for k, c in enumerate(t_x1.coeffs):
        if c:
            acc = acc + (ONE_PLUS_3Z**k * TWO_Z ** (r - k)).scale(c)
    return ONE_PLUS_Z ** (g.m - r) * acc


def moebius_values(masks: Sequence[int]) -> dict[int, int]:
    """Moebius function ``mu(empty, H)`` on a family of sets ordered by inclusion.

    ``masks`` must contain 0 (the bottom element).
    """
    ordered = sorted(masks, key=lambda h: (h.bit_count(), h))
    if not ordered or ordered[0] != 0:
        raise ValueError("poset must contain the empty set")
    mu: dict[int, int] = {}
    for idx, h in enumerate(ordered):
        if h == 0:
            mu[h] = 1
            continue
        s = 0
        for h2 in ordered[:idx]:
            if h2 & h == h2:
                s += mu[h2]
        mu[h] = -s
    return mu


def hstar_moebius(g: Multigraph, limit: int = DEFAULT_SUBSET_LIMIT) -> IntPolynomial:
    """Sum of ``mu(H) (2z)^|H| (1+3z)^(m-|H|)`` over bridge-free subsets ``H``."""
    masks = list(enumerate_bridge_free_subsets(g, limit=limit))
    mu = moebius_values(masks)
    by_size: dict[int, int] = {}
    for h, val in mu.items():
        k = h.bit_count()
        by_size[k] = by_size.get(k, 0) + val
    total = IntPolynomial()
    for k, coeff in sorted(by_size.items()):
        if coeff:
            total = total + (TWO_Z**k * ONE_PLUS_3Z ** (g.m - k)).scale(coeff)
    return total


def hstar_triangulation(g: Multigraph) -> IntPolynomial:
    # Local import: the geometry stack is heavy and optional for formula users.
    from .polytope.triangulation import placing_triangulation
    from .polytope.decoration import h_vector_from_triangulation

    return h_vector_from_triangulation(placing_triangulation(g))


PIPELINES: dict[str, Callable[[Multigraph], IntPolynomial]] = {
    "acyclic": hstar_acyclic,
    "delcon": hstar_delcon,
    "tutte": hstar_tutte,
    "moebius": hstar_moebius,
    "triangulation": hstar_triangulation,
}


def compute_hstar(g: Multigraph, method: str = "delcon", limit: int = DEFAULT_SUBSET_LIMIT) -> HstarReport:
    if method not in PIPELINES:
        raise ValueError(f"unknown method {method!r}")
    if method in ("acyclic", "moebius"):
        poly = PIPELINES[method](g, limit=limit)
    else:
        poly = PIPELINES[method](g)
    return HstarReport(poly, method, g.m)


def volume(g: Multigraph) -> int:
    """Normalized volume ``2**m * T(2, 1)``."""
    return 2**g.m * count_acyclic_via_tutte(g)


def _class_factor(a: int) -> IntPolynomial:
    # 2 a z (1+z)^(a-1) + (1+z)^a
    if a < 1:
        raise ValueError("edge multiplicities must be positive")
    return TWO_Z.scale(a) * ONE_PLUS_Z ** (a - 1) + ONE_PLUS_Z**a


def closed_form_multitree(multiplicities: Sequence[int]) -> IntPolynomial:
    out = ONE
    for a in multiplicities:
        out = out * _class_factor(a)
    return out


def closed_form_multicycle(multiplicities: Sequence[int]) -> IntPolynomial:
    if not multiplicities:
        raise ValueError("multicycle needs at least one edge class")
    cyc = ONE
    for a in multiplicities:
        if a < 1:
            raise ValueError("edge multiplicities must be positive")
        cyc = cyc * TWO_Z.scale(a) * ONE_PLUS_Z ** (a - 1)
    return closed_form_multitree(multiplicities) - cyc


def closed_form_theta(a: int, b: int, c: int) -> IntPolynomial:
    if min(a, b, c) < 1:
        raise ValueError("theta path lengths must be positive")
    return (
        ONE_PLUS_3Z ** (a + b + c)
        - TWO_Z ** (a + b) * ONE_PLUS_3Z**c
        - TWO_Z ** (a + c) * ONE_PLUS_3Z**b
        - TWO_Z ** (b + c) * ONE_PLUS_3Z**a
        + (TWO_Z ** (a + b + c)).scale(2)
    )


def closed_form_k2n(n: int) -> IntPolynomial:
    if n < 1:
        raise ValueError("n must be positive")
    base = IntPolynomial([1, 6, 5])
    return base**n + IntPolynomial.monomial(2, 4 * n) * base ** (n - 1)


def k2n_volume(n: int) -> int:
    """``(1 + n/3) 12^n``, kept integral as ``12^n (3+n) / 3``."""
    num = 12**n * (3 + n)
    assert num % 3 == 0
    return num // 3
