"""Exact integer polynomials in one (``z``) and two (``x``, ``y``) variables."""

from __future__ import annotations

from math import comb
from typing import Iterable, Mapping


class IntPolynomial:
    """Dense univariate polynomial; ``coeffs[i]`` is the coefficient of ``z**i``.

    Immutable. Trailing zeros are stripped, so the zero polynomial has
    ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @classmethod
    def constant(cls, a: int) -> "IntPolynomial":
        return cls([a])

    @classmethod
    def monomial(cls, k: int, a: int = 1) -> "IntPolynomial":
        return cls([0] * k + [a])

    @classmethod
    def linear(cls, a: int, b: int) -> "IntPolynomial":
        """``a + b*z``"""
        return cls([a, b])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def padded(self, m: int) -> list[int]:
        """Coefficients ``0..m`` with implicit zeros filled in."""
        if self.degree > m:
            raise ValueError(f"degree {self.degree} exceeds {m}")
        return [self[i] for i in range(m + 1)]

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k: int) -> "IntPolynomial":
        return IntPolynomial(k * c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative exponent")
        result = IntPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, t: int) -> int:
        return eval_int(self, t)

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self):
        return render_text(self)


def eval_int(p: IntPolynomial, t: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * t + c
    return acc


def eval_at_one(p: IntPolynomial) -> int:
    return sum(p.coeffs)


def _render(p: IntPolynomial, var: str, latex: bool) -> str:
    if p.is_zero():
        return "0"
    terms = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            power = var if i == 1 else (f"{var}^{{{i}}}" if latex and i > 9 else f"{var}^{i}")
            body = power if mag == 1 else f"{mag}{power}"
        terms.append((c < 0, body))
    neg, body = terms[0]
    out = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        out += (" - " if neg else " + ") + body
    return out


def render_text(p: IntPolynomial, var: str = "z") -> str:
    return _render(p, var, latex=False)


def render_latex(p: IntPolynomial, var: str = "z") -> str:
    return _render(p, var, latex=True)


def to_json(p: IntPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def from_json(data: list[str]) -> IntPolynomial:
    return IntPolynomial(int(c) for c in data)


def check_ultra_log_concave(p: IntPolynomial, m: int) -> tuple[bool, int | None]:
    """Test ``i(m-i) h_i^2 >= (i+1)(m-i+1) h_{i-1} h_{i+1}`` for ``1 <= i <= m-1``.

    Returns ``(ok, first_violating_index)``.
    """
    h = p.padded(m)
    for i in range(1, m):
        if i * (m - i) * h[i] ** 2 < (i + 1) * (m - i + 1) * h[i - 1] * h[i + 1]:
            return False, i
    return True, None


def check_coefficient_bound(p: IntPolynomial, m: int) -> bool:
    if p.degree > m:
        return False
    return all(0 <= p[i] <= 3**i * comb(m, i) for i in range(m + 1))


class BivarPolynomial:
    """Sparse polynomial in ``x``, ``y``: ``{(i, j): c}`` for ``c * x**i * y**j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        object.__setattr__(self, "terms", {k: int(v) for k, v in (terms or {}).items() if v})

    def __setattr__(self, name, value):
        raise AttributeError("BivarPolynomial is immutable")

    @classmethod
    def constant(cls, a: int) -> "BivarPolynomial":
        return cls({(0, 0): a})

    @classmethod
    def x_power(cls, i: int, j: int = 0) -> "BivarPolynomial":
        return cls({(i, j): 1})

    def __eq__(self, other):
        if not isinstance(other, BivarPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "BivarPolynomial") -> "BivarPolynomial":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return BivarPolynomial(out)

    def __neg__(self):
        return BivarPolynomial({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k: int) -> "BivarPolynomial":
        return BivarPolynomial({key: k * v for key, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a * b
        return BivarPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BivarPolynomial":
        result = BivarPolynomial.constant(1)
        for _ in range(k):
            result = result * self
        return result

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.terms.items())

    def at_y_one(self) -> IntPolynomial:
        """``T(x, 1)`` as a univariate polynomial in ``x``."""
        acc: dict[int, int] = {}
        for (i, _j), c in self.terms.items():
            acc[i] = acc.get(i, 0) + c
        top = max(acc, default=-1)
        return IntPolynomial(acc.get(i, 0) for i in range(top + 1))

    def __repr__(self):
        return f"BivarPolynomial({dict(sorted(self.terms.items()))})"

    def __str__(self):
        return render_bivar(self)


def render_bivar(p: BivarPolynomial) -> str:
    if not p.terms:
        return "0"

    def mono(var, k):
        return "" if k == 0 else (var if k == 1 else f"{var}^{k}")

    parts = []
    for (i, j) in sorted(p.terms, key=lambda t: (-(t[0] + t[1]), -t[0])):
        c = p.terms[(i, j)]
        body = mono("x", i) + mono("y", j)
        mag = abs(c)
        if not body:
            body = str(mag)
        elif mag != 1:
            body = f"{mag}{body}"
        parts.append((c < 0, body))
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def bivar_to_json(p: BivarPolynomial) -> list[list[str]]:
    """``[[x_degree, y_degree, coefficient], ...]`` sorted by degrees, all as strings."""
    return [[str(i), str(j), str(c)] for (i, j), c in sorted(p.terms.items())]
