"""The bracket symbol extracted from one-part double Hurwitz numbers.

For a genus ``g``, an index ``k`` with ``0 <= k <= g`` and exponents
``b = (b_1, ..., b_n)``, the symbol is ``(-1)**k`` times the coefficient of
``beta_1**b_1 ... beta_n**b_n`` in ``H / (r! d)``, viewed as a polynomial in
the parts of ``beta`` with ``d = sum(beta)``.  It vanishes unless
``sum(b) + 2k = 4g - 3 + n``, and is undefined for ``(g, n)`` equal to
``(0, 1)`` or ``(0, 2)``.

Two routes are provided: :func:`symbol_def` expands that polynomial, and
:func:`symbol_wittcor` evaluates an explicit finite sum built from the
``v`` and ``f`` coefficients and iterated derivations of products of the
formal series ``Q^(i)``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable

from .errors import PreconditionError
from .partitions import aut_order, padded_partitions, partitions_of
from .polys import MPoly
from .series import UnivariateSeries, bernoulli, f_coeff, sinhc_series, v_coeff, xi

__all__ = [
    "PicIndex",
    "one_part_polynomial",
    "symbol_def",
    "symbol_wittcor",
    "symbol",
    "QPolynomial",
    "q_operator_coefficient",
    "FAMILIES",
    "closed_form_symbol",
    "closed_form_exponents",
    "family_range",
    "one_point_generating_coefficient",
    "check_string",
    "check_dilaton",
    "EXCLUDED",
]

EXCLUDED = frozenset({(0, 1), (0, 2)})


@dataclass(frozen=True)
class PicIndex:
    genus: int
    k: int
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(sorted((int(x) for x in self.b), reverse=True)))
        _validate(self.genus, self.k, self.b)

    @property
    def n(self) -> int:
        return len(self.b)

    @property
    def balanced(self) -> bool:
        return sum(self.b) + 2 * self.k == 4 * self.genus - 3 + self.n

    def __str__(self) -> str:
        taus = " ".join(f"tau_{x}" for x in self.b)
        return f"<<{taus} Lambda_{2 * self.k}>>_{self.genus}"


def _validate(g: int, k: int, b: tuple) -> None:
    if g < 0:
        raise PreconditionError("genus must be non-negative")
    if not 0 <= k <= g:
        raise PreconditionError(f"need 0 <= k <= g, got k={k}, g={g}")
    if not b:
        raise PreconditionError("at least one tau is required")
    if min(b) < 0:
        raise PreconditionError("tau exponents must be non-negative")
    if (g, len(b)) in EXCLUDED:
        raise PreconditionError(f"the symbol is undefined for (g, n) = {(g, len(b))}")


@lru_cache(maxsize=None)
def one_part_polynomial(g: int, n: int) -> MPoly:
    """``H / (r! d)`` for ``alpha = (d)`` as a polynomial in ``beta_1..beta_n``."""
    if g < 0 or n < 1:
        raise PreconditionError("need g >= 0 and n >= 1")
    if (g, n) in EXCLUDED:
        raise PreconditionError(f"not a polynomial for (g, n) = {(g, n)}")
    d = MPoly.linear_sum(n)
    one = MPoly.constant(n, 1)
    shifted = {}
    for j in range(1, g + 1):
        shifted[j] = sum(
            (MPoly(n, {tuple(2 * j if t == i else 0 for t in range(n)): 1}) for i in range(n)),
            -one,
        )
    total = MPoly(n)
    for lam in partitions_of(g):
        term = one * Fraction(1, aut_order(lam))
        for part in lam:
            term = term * shifted[part] * xi(2 * part)
        total = total + term
    return d ** (n + 2 * g - 3) * total * Fraction(1, 2 ** (2 * g))


def symbol_def(g: int, k: int, b: Iterable[int]) -> Fraction:
    """The symbol read off from the one-part polynomial."""
    index = PicIndex(g, k, tuple(b))
    if not index.balanced:
        return Fraction(0)
    poly = one_part_polynomial(g, index.n)
    return (-1) ** k * poly.coefficient(index.b)


class QPolynomial:
    """Polynomials in formal symbols ``Q^(0), Q^(1), ...``.

    A monomial is the weakly decreasing tuple of its upper indices.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {m: Fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def product(cls, indices: Iterable[int]) -> "QPolynomial":
        return cls({tuple(sorted(indices, reverse=True)): 1})

    def delta(self, bound: tuple | None = None) -> "QPolynomial":
        """Apply the derivation raising one upper index by one (Leibniz rule).

        With ``bound``, monomials that can no longer reach it are dropped.
        """
        out: dict = defaultdict(Fraction)
        for mono, c in self.terms.items():
            for value, mult in Counter(mono).items():
                lst = list(mono)
                lst[lst.index(value)] = value + 1
                new = tuple(sorted(lst, reverse=True))
                if bound is not None and any(x > y for x, y in zip(new, bound)):
                    continue
                out[new] += c * mult
        return QPolynomial(out)

    def coefficient(self, indices: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(sorted(indices, reverse=True)), Fraction(0))


def q_operator_coefficient(steps: int, theta: Iterable[int], b: Iterable[int]) -> Fraction:
    """Coefficient of ``prod Q^(b_i)`` in ``Delta**steps`` of ``prod Q^(2 theta_i)``."""
    target = tuple(sorted(b, reverse=True))
    start = [2 * t for t in theta]
    if len(start) != len(target):
        return Fraction(0)
    poly = QPolynomial.product(start)
    for _ in range(steps):
        poly = poly.delta(target)
        if not poly.terms:
            return Fraction(0)
    return poly.coefficient(target)


def symbol_wittcor(g: int, k: int, b: Iterable[int]) -> Fraction:
    """The symbol from its explicit finite-sum expression."""
    index = PicIndex(g, k, tuple(b))
    if not index.balanced:
        return Fraction(0)
    n = index.n
    steps = 2 * g - 3 + n
    total = Fraction(0)
    for theta in padded_partitions(g - k, n):
        weight = Fraction(1, aut_order(theta))
        for t in theta:
            weight *= v_coeff(2 * t)
        if weight:
            total += weight * q_operator_coefficient(steps, theta, index.b)
    return aut_order(index.b) * f_coeff(2 * k) * (-1) ** k * total


def symbol(g: int, k: int, b: Iterable[int], method: str = "wittcor") -> Fraction:
    if method == "def":
        return symbol_def(g, k, b)
    if method == "wittcor":
        return symbol_wittcor(g, k, b)
    raise PreconditionError(f"unknown symbol method {method!r}")


def _symbol_or_zero(g: int, k: int, b: tuple, method: str) -> Fraction:
    # terms with a negative exponent, an empty tau list or an undefined (g, n) vanish
    if not b or min(b) < 0 or (g, len(b)) in EXCLUDED:
        return Fraction(0)
    return symbol(g, k, b, method)


# closed forms ---------------------------------------------------------------


def _double_factorial(m: int) -> int:
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def _tau_prefactor(g: int, k: int) -> Fraction:
    return (-1) ** k * f_coeff(2 * k) / (24 ** (g - k) * factorial(g - k))


def _lambda_constant(g: int) -> Fraction:
    half = 2 ** (2 * g - 1)
    return Fraction(half - 1, half * factorial(2 * g)) * abs(bernoulli(2 * g))


def _binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def closed_form_exponents(family: str, g: int, k: int = 0, b: Iterable[int] | None = None) -> tuple:
    """The ``tau`` exponents a family refers to, after checking its range."""
    if family == "one_point":
        if g < 1 or not 0 <= k <= g:
            raise PreconditionError("one_point needs g >= 1 and 0 <= k <= g")
        return (4 * g - 2 - 2 * k,)
    if family == "top_psi":
        if g < 1 or k != 0:
            raise PreconditionError("top_psi needs g >= 1 and k = 0")
        return (4 * g - 2,)
    if family == "lambda_top_point":
        if g < 1 or k != g:
            raise PreconditionError("lambda_top_point needs g >= 1 and k = g")
        return (2 * g - 2,)
    if family == "two_point":
        b = tuple(b or ())
        if g < 2 or not 0 <= k <= g:
            raise PreconditionError("two_point needs g >= 2 and 0 <= k <= g")
        if len(b) != 2 or min(b) < 0 or sum(b) != 4 * g - 2 * k - 1:
            raise PreconditionError("two_point needs b1 + b2 = 4g - 2k - 1")
        return b
    if family == "tau2":
        if g < 1 or not 0 <= k <= g or (k, g) == (1, 1):
            raise PreconditionError("tau2 needs g >= 1, 0 <= k <= g, (k, g) != (1, 1)")
        return (2,) * (4 * g - 3 - 2 * k)
    if family == "tau2_tau3":
        if g < 2 or not 0 <= k <= g or (k, g) == (2, 2):
            raise PreconditionError("tau2_tau3 needs g >= 2, 0 <= k <= g, (k, g) != (2, 2)")
        return (3,) + (2,) * (4 * g - 5 - 2 * k)
    if family == "tau2_tau3sq":
        if g < 2 or not 0 <= k <= g or (k, g) in {(1, 2), (2, 2), (3, 3)}:
            raise PreconditionError("tau2_tau3sq needs g >= 2, 0 <= k <= g, outside three cases")
        return (3, 3) + (2,) * (4 * g - 7 - 2 * k)
    if family == "lambda_top":
        b = tuple(b or ())
        if g < 1 or k != g:
            raise PreconditionError("lambda_top needs g >= 1 and k = g")
        if not b or min(b) < 0 or sum(b) != 2 * g - 3 + len(b):
            raise PreconditionError("lambda_top needs sum(b) = 2g - 3 + n")
        return b
    raise PreconditionError(f"unknown family {family!r}")


FAMILIES = (
    "one_point",
    "top_psi",
    "lambda_top_point",
    "two_point",
    "tau2",
    "tau2_tau3",
    "tau2_tau3sq",
    "lambda_top",
)


def closed_form_symbol(
    family: str,
    g: int,
    k: int = 0,
    b: Iterable[int] | None = None,
    *,
    as_printed: bool = False,
) -> Fraction:
    """Value of a closed-form family; see :data:`FAMILIES`.

    The ``tau2`` families carry the factor ``|Aut b|`` that the symbol's
    definition requires.  ``as_printed=True`` omits it, reproducing the form
    in which these three expressions are usually quoted; that form agrees
    with the symbol only when all exponents are distinct.
    """
    exps = closed_form_exponents(family, g, k, b)
    if family in ("tau2", "tau2_tau3", "tau2_tau3sq") and not as_printed:
        return aut_order(exps) * closed_form_symbol(family, g, k, b, as_printed=True)
    if family == "one_point":
        return (-1) ** k * f_coeff(2 * k) * v_coeff(2 * g - 2 * k)
    if family == "top_psi":
        return Fraction(1, 2 ** (2 * g) * factorial(2 * g + 1))
    if family == "lambda_top_point":
        half = 2 ** (2 * g - 1)
        return (-1) ** g * Fraction(1 - half, half * factorial(2 * g)) * bernoulli(2 * g)
    if family == "two_point":
        b1, b2 = exps
        top = 2 * g - 2 * k + 2
        total = sum(
            _binom(top, i) * (_binom(2 * g - 1, b1 + 1 - i) + _binom(2 * g - 1, b2 + 1 - i))
            for i in range(1, top + 1, 2)
        )
        return (-1) ** k * f_coeff(2 * k) * Fraction(total, 2 ** (top - 1) * factorial(top))
    if family == "tau2":
        return _tau_prefactor(g, k) * _double_factorial(6 * g - 7 - 2 * k)
    if family == "tau2_tau3":
        return (
            _tau_prefactor(g, k)
            * _double_factorial(6 * g - 7 - 2 * k)
            * Fraction(6 * g - 4 - 4 * k, 3)
        )
    if family == "tau2_tau3sq":
        inner = (6 * g - 4 - 4 * k) * (6 * g - 7 - 4 * k) - (6 * g - 2 - 6 * k)
        return (
            _tau_prefactor(g, k)
            * _double_factorial(6 * g - 9 - 2 * k)
            * Fraction((3 * g - 4 - k) * inner, 9)
        )
    # lambda_top
    n = len(exps)
    multinomial = factorial(2 * g - 3 + n)
    for x in exps:
        multinomial //= factorial(x)
    return multinomial * _lambda_constant(g)


def family_range(family: str, g_max: int, n_max: int = 4) -> list[tuple]:
    """Every ``(g, k, b)`` a family covers with ``g <= g_max``.

    ``lambda_top`` is unbounded in ``n`` and is cut at ``n_max`` parts;
    ``two_point`` lists each unordered pair of exponents once.
    """
    out = []
    for g in range(g_max + 1):
        for k in range(g + 1):
            if family == "two_point":
                top = 4 * g - 2 * k - 1
                candidates = [(b1, top - b1) for b1 in range(top, -1, -1) if b1 >= top - b1]
            elif family == "lambda_top":
                candidates = [
                    tuple(b)
                    for n in range(1, n_max + 1)
                    if 2 * g - 3 + n >= 0
                    for b in padded_partitions(2 * g - 3 + n, n)
                ]
            else:
                candidates = [None]
            for b in candidates:
                try:
                    closed_form_exponents(family, g, k, b)
                except PreconditionError:
                    continue
                out.append((g, k, b))
    return out


def one_point_generating_coefficient(g: int, k: int) -> Fraction:
    """``[t**(2g) x**(2k)]`` of ``x sinh(t/2) / sin(x t / 2)``.

    The function factors as ``sinh(t/2)/(t/2)`` times ``(y/2)/sin(y/2)`` with
    ``y = x t``; the second factor is expanded by inverting the sine series.
    """
    if not 0 <= k <= g:
        return Fraction(0)
    sinh_part = sinhc_series(Fraction(1, 2), 2 * g)
    sine = UnivariateSeries.from_function(
        lambda j: Fraction((-1) ** (j // 2), 2**j * factorial(j + 1)) if j % 2 == 0 else 0,
        2 * k,
    )
    return sinh_part[2 * g - 2 * k] * sine.reciprocal()[2 * k]


# string and dilaton -----------------------------------------------------------


def check_string(g: int, k: int, b: Iterable[int], method: str = "wittcor") -> tuple:
    """Both sides of the string equation for ``<<tau_0 tau_b Lambda_2k>>_g``.

    Returns ``(lhs, rhs, expected_lhs_minus_rhs)``.  The difference is zero
    except for ``g = k = 1`` with no further ``tau``, where it is ``1/24``.
    """
    b = tuple(b)
    if g == 0 and len(b) < 3:
        raise PreconditionError("the string equation in genus 0 needs n >= 3")
    if not 0 <= k <= g:
        raise PreconditionError("need 0 <= k <= g")
    lhs = symbol(g, k, (0,) + b, method)
    rhs = Fraction(0)
    for i, x in enumerate(b):
        if x >= 1:
            rhs += _symbol_or_zero(g, k, b[:i] + (x - 1,) + b[i + 1 :], method)
    expected = Fraction(1, 24) if (g, k, len(b)) == (1, 1, 0) else Fraction(0)
    return lhs, rhs, expected


def check_dilaton(g: int, k: int, b: Iterable[int], method: str = "wittcor") -> tuple:
    """Both sides of the dilaton equation for ``<<tau_1 tau_b Lambda_2k>>_g``."""
    b = tuple(b)
    if not 0 <= k <= g:
        raise PreconditionError("need 0 <= k <= g")
    lhs = _symbol_or_zero(g, k, (1,) + b, method)
    rhs = (2 * g - 2 + len(b)) * _symbol_or_zero(g, k, b, method)
    return lhs, rhs, Fraction(0)
