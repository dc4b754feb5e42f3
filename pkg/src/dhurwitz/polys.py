"""Sparse multivariate polynomials with rational coefficients.

Monomials are exponent tuples of a fixed length.  Only the operations the
rest of the package needs are provided.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["MPoly"]


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        self.nvars = nvars
        self.terms: dict[tuple, Fraction] = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(exps)] = c

    @classmethod
    def constant(cls, nvars: int, c) -> "MPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, index: int) -> "MPoly":
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @classmethod
    def linear_sum(cls, nvars: int) -> "MPoly":
        """The sum of all variables."""
        return cls(nvars, {tuple(int(i == j) for j in range(nvars)): 1 for i in range(nvars)})

    def _lift(self, other) -> "MPoly":
        return other if isinstance(other, MPoly) else MPoly.constant(self.nvars, other)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            other = Fraction(other)
            return MPoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out: dict = defaultdict(Fraction)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def __pow__(self, n: int) -> "MPoly":
        if n < 0:
            raise ValueError("negative powers are not polynomial")
        result, base = MPoly.constant(self.nvars, 1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, MPoly):
            try:
                other = MPoly.constant(self.nvars, other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}^{k}" if k > 1 else f"x{i}" for i, k in enumerate(e) if k)
            parts.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(parts)

    def coefficient(self, exps: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def total_degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def substitute(self, index: int, value) -> "MPoly":
        """Replace one variable by a constant."""
        value = Fraction(value)
        out: dict = defaultdict(Fraction)
        for e, c in self.terms.items():
            k = e[index]
            out[e[:index] + (0,) + e[index + 1 :]] += c * value**k
        return MPoly(self.nvars, out)

    def derivative(self, index: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            k = e[index]
            if k:
                out[e[:index] + (k - 1,) + e[index + 1 :]] = c * k
        return MPoly(self.nvars, out)

    def evaluate(self, point: Iterable) -> Fraction:
        point = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self.terms.items():
            term = c
            for p, k in zip(point, e):
                if k:
                    term *= p**k
            total += term
        return total
