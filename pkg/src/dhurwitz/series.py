"""Truncated power series in one variable and the special coefficients used
by the one-part formulas.

All arithmetic is exact.  ``xi``, ``v`` and ``f`` have closed forms in terms
of Bernoulli numbers; the ``*_from_series`` variants expand the defining
generating function instead and serve as cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Iterable

from .errors import PreconditionError

__all__ = [
    "UnivariateSeries",
    "bernoulli",
    "xi",
    "v_coeff",
    "f_coeff",
    "bernoulli_from_series",
    "xi_from_series",
    "v_from_series",
    "f_from_series",
    "sinhc_series",
]


class UnivariateSeries:
    """Power series ``sum c_k t**k`` known through ``t**order``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is not None:
            coeffs = (coeffs + [Fraction(0)] * (order + 1))[: order + 1]
        if not coeffs:
            raise PreconditionError("a series needs at least a constant term")
        self.coeffs = coeffs

    @classmethod
    def from_function(cls, fn: Callable[[int], object], order: int) -> "UnivariateSeries":
        return cls((fn(k) for k in range(order + 1)))

    @classmethod
    def constant(cls, c, order: int) -> "UnivariateSeries":
        return cls([c], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k <= self.order:
            return self.coeffs[k]
        if k < 0:
            return Fraction(0)
        raise PreconditionError(f"coefficient {k} beyond truncation order {self.order}")

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, UnivariateSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"UnivariateSeries({[str(c) for c in self.coeffs]})"

    def _coerce(self, other) -> "UnivariateSeries":
        if isinstance(other, UnivariateSeries):
            return other
        return UnivariateSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return UnivariateSeries(a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return UnivariateSeries(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, UnivariateSeries):
            other = Fraction(other)
            return UnivariateSeries(c * other for c in self.coeffs)
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        return UnivariateSeries(
            sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)
        )

    __rmul__ = __mul__

    def reciprocal(self) -> "UnivariateSeries":
        a = self.coeffs
        if a[0] == 0:
            raise PreconditionError("series with zero constant term is not invertible")
        inv = [1 / a[0]]
        for k in range(1, self.order + 1):
            inv.append(-sum(a[i] * inv[k - i] for i in range(1, k + 1)) / a[0])
        return UnivariateSeries(inv)

    def __truediv__(self, other):
        if not isinstance(other, UnivariateSeries):
            return self * (1 / Fraction(other))
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    def exp(self) -> "UnivariateSeries":
        """Exponential of a series with zero constant term."""
        s = self.coeffs
        if s[0] != 0:
            raise PreconditionError("exp needs a zero constant term to stay rational")
        e = [Fraction(1)]
        for n in range(1, self.order + 1):
            e.append(sum(k * s[k] * e[n - k] for k in range(1, n + 1)) / n)
        return UnivariateSeries(e)

    def log(self) -> "UnivariateSeries":
        """Logarithm of a series with constant term 1."""
        s = self.coeffs
        if s[0] != 1:
            raise PreconditionError("log needs constant term 1")
        out = [Fraction(0)]
        for n in range(1, self.order + 1):
            acc = sum((k * out[k] * s[n - k] for k in range(1, n)), Fraction(0))
            out.append(s[n] - acc / n)
        return UnivariateSeries(out)

    def __pow__(self, exponent: int) -> "UnivariateSeries":
        if not isinstance(exponent, int):
            raise PreconditionError("only integer powers are supported")
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        result = UnivariateSeries.constant(1, self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result


def sinhc_series(scale, order: int) -> UnivariateSeries:
    """Expansion of ``sinh(scale*t) / (scale*t)``."""
    scale = Fraction(scale)
    return UnivariateSeries.from_function(
        lambda k: scale**k / factorial(k + 1) if k % 2 == 0 else 0, order
    )


@lru_cache(maxsize=None)
def _bernoulli_table(n: int) -> tuple:
    b = [Fraction(1)]
    for m in range(1, n + 1):
        b.append(-sum(comb(m + 1, k) * b[k] for k in range(m)) / (m + 1))
    return tuple(b)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number ``B_n`` with ``B_1 = -1/2``."""
    if n < 0:
        raise PreconditionError("Bernoulli index must be non-negative")
    return _bernoulli_table(n)[n]


def _even_index(two_j: int) -> int:
    if two_j < 0 or two_j % 2:
        raise PreconditionError(f"expected a non-negative even index, got {two_j}")
    return two_j // 2


def xi(two_j: int) -> Fraction:
    """Coefficient of ``x**(2j)`` in ``log(sinh(x)/x)``."""
    j = _even_index(two_j)
    if j == 0:
        return Fraction(0)
    return 2 ** (2 * j) * bernoulli(2 * j) / (2 * j * factorial(2 * j))


def v_coeff(two_j: int) -> Fraction:
    """Coefficient of ``x**(2j)`` in ``(2/x) sinh(x/2)``."""
    j = _even_index(two_j)
    return Fraction(1, 2 ** (2 * j) * factorial(2 * j + 1))


def f_coeff(two_j: int) -> Fraction:
    """Coefficient of ``x**(2j)`` in ``(x/2) / sinh(x/2)``."""
    j = _even_index(two_j)
    if j == 0:
        return Fraction(1)
    half = 2 ** (2 * j - 1)
    return Fraction(1 - half, half * factorial(2 * j)) * bernoulli(2 * j)


@lru_cache(maxsize=None)
def _sinhc_half(order: int) -> UnivariateSeries:
    return sinhc_series(Fraction(1, 2), order)


def bernoulli_from_series(n: int) -> Fraction:
    """``n!`` times the coefficient of ``x**n`` in ``x / (e**x - 1)``."""
    if n < 0:
        raise PreconditionError("Bernoulli index must be non-negative")
    quotient = UnivariateSeries.from_function(lambda k: Fraction(1, factorial(k + 1)), n)
    return quotient.reciprocal()[n] * factorial(n)


def xi_from_series(two_j: int) -> Fraction:
    j = _even_index(two_j)
    return sinhc_series(1, 2 * j).log()[2 * j]


def v_from_series(two_j: int) -> Fraction:
    j = _even_index(two_j)
    return _sinhc_half(2 * j)[2 * j]


def f_from_series(two_j: int) -> Fraction:
    j = _even_index(two_j)
    return _sinhc_half(2 * j).reciprocal()[2 * j]

