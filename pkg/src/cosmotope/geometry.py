"""Exact rational linear algebra for points in the hyperplane ``sum(x) = 1``.

Everything runs on :class:`fractions.Fraction` or plain ``int``; nothing here
ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = Sequence  # of int or Fraction


class DimensionError(ValueError):
    pass


class SingularError(ArithmeticError):
    pass


def determinant(rows: Sequence[Vector]) -> Fraction | int:
    """Exact determinant; Bareiss fraction-free elimination on integer input."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise DimensionError("determinant needs a square matrix")
    if n == 0:
        return 1
    if all(isinstance(x, int) for r in rows for x in r):
        return _bareiss(rows)
    return _gauss_det([[Fraction(x) for x in r] for r in rows])


def _bareiss(rows: Sequence[Sequence[int]]) -> int:
    a = [list(r) for r in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _gauss_det(a: list[list[Fraction]]) -> Fraction:
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] / a[k][k]
            if f:
                for j in range(k, n):
                    a[i][j] -= f * a[k][j]
    return det


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def orientation_sign(points: Sequence[Vector]) -> int:
    """Sign of the determinant whose rows are the given ``D`` points in ``R^D``.

    For points on ``sum(x) = 1`` (never through the origin), zero means
    affinely dependent.
    """
    if not points:
        raise DimensionError("no points")
    dim = len(points[0])
    if len(points) != dim or any(len(p) != dim for p in points):
        raise DimensionError(f"need exactly {dim} points of dimension {dim}")
    return _sign(determinant(points))


def inverse(rows: Sequence[Vector]) -> list[list[Fraction]]:
    """Gauss-Jordan inverse; raises :class:`SingularError`."""
    n = len(rows)
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise SingularError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv_p = 1 / a[k][k]
        a[k] = [x * inv_p for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [r[n:] for r in a]


def solve(columns: Sequence[Vector], target: Vector) -> list[Fraction]:
    """Solve ``sum_i c_i * columns[i] = target`` for a square system."""
    n = len(columns)
    if len(target) != n or any(len(c) != n for c in columns):
        raise DimensionError("solve needs a square system")
    a = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(n)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise SingularError("system is singular")
        a[k], a[piv] = a[piv], a[k]
        inv_p = 1 / a[k][k]
        a[k] = [x * inv_p for x in a[k]]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return [a[i][n] for i in range(n)]


def barycentric(cell: Sequence[Vector], x: Vector) -> list[Fraction]:
    """Coefficients ``l`` with ``sum l_i cell[i] = x``.

    On the hyperplane ``sum = 1`` these sum to 1 whenever ``x`` does, so they
    are the affine (barycentric) coordinates.
    """
    return solve(cell, x)


def dot(a: Vector, b: Vector):
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class Hyperplane:
    """``{x : normal . x = offset}`` with a primitive integer normal.

    Inside ``sum(x) = 1`` an affine hyperplane has many representatives
    (add multiples of the all-ones vector); we always store the one through
    the origin (``offset == 0``), which is unique up to scaling, then fix the
    scale by content 1 and first nonzero entry positive.
    """

    normal: tuple[int, ...]
    offset: Fraction = Fraction(0)

    def side(self, x: Vector) -> int:
        return _sign(dot(self.normal, x) - self.offset)


def _nullspace_vector(rows: Sequence[Vector], dim: int) -> list[Fraction]:
    """One nonzero vector in the kernel of ``rows``; requires rank ``dim - 1``."""
    a = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(dim):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv_p = 1 / a[r][c]
        a[r] = [x * inv_p for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(dim) if c not in pivots]
    if len(free) != 1:
        raise SingularError("points are affinely dependent")
    fc = free[0]
    v = [Fraction(0)] * dim
    v[fc] = Fraction(1)
    for i, pc in enumerate(pivots):
        v[pc] = -a[i][fc]
    return v


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with first nonzero entry positive."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector")
    ints = [x // g for x in ints]
    first = next(x for x in ints if x)
    if first < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def facet_hyperplane(face: Sequence[Vector]) -> Hyperplane:
    """Hyperplane through ``D - 1`` affinely independent points of ``sum(x) = 1`` in ``R^D``."""
    if not face:
        raise DimensionError("empty face")
    dim = len(face[0])
    if len(face) != dim - 1:
        raise DimensionError(f"need {dim - 1} points in R^{dim}")
    return Hyperplane(primitive(_nullspace_vector(face, dim)))


def lp_membership(x: Vector, generators: Sequence[Vector]) -> bool:
    """Decide ``x in conv(generators)`` by exact phase-1 simplex with Bland's rule.

    Feasibility system: ``lambda >= 0``, ``sum(lambda) = 1``, ``G lambda = x``.
    """
    if not generators:
        raise ValueError("need at least one generator")
    dim = len(x)
    k = len(generators)
    rows = [[Fraction(g[i]) for g in generators] + [Fraction(x[i])] for i in range(dim)]
    rows.append([Fraction(1)] * k + [Fraction(1)])
    return _phase_one_feasible(rows, k)


def _phase_one_feasible(rows: list[list[Fraction]], nvars: int) -> bool:
    """Is ``A y = b, y >= 0`` feasible? ``rows`` are ``[A | b]``.

    Adds one artificial per row and minimizes their sum. Bland's rule (lowest
    eligible index enters, ties in the ratio test broken by lowest basic index)
    guarantees termination on degenerate tableaux.
    """
    nrows = len(rows)
    width = nvars + nrows
    tab = []
    for i, r in enumerate(rows):
        coeffs, rhs = r[:nvars], r[nvars]
        if rhs < 0:
            coeffs = [-c for c in coeffs]
            rhs = -rhs
        art = [Fraction(int(j == i)) for j in range(nrows)]
        tab.append(coeffs + art + [rhs])
    basis = [nvars + i for i in range(nrows)]
    # reduced costs of the phase-1 objective sum(artificials), in minimization form
    cost = [Fraction(0)] * (width + 1)
    for r in tab:
        for j in range(nvars):
            cost[j] -= r[j]
        cost[width] -= r[width]
    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        leave = None
        for i, r in enumerate(tab):
            if r[enter] > 0:
                ratio = r[width] / r[enter]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            # unbounded cannot happen in phase 1 (objective bounded below by 0)
            raise ArithmeticError("phase-1 simplex unbounded")
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(nrows):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [a - f * b for a, b in zip(tab[i], tab[leave])]
        if cost[enter] != 0:
            f = cost[enter]
            cost = [a - f * b for a, b in zip(cost, tab[leave])]
        basis[leave] = enter
    return cost[width] == 0
