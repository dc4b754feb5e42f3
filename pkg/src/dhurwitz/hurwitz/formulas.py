"""Closed expressions for special families of double Hurwitz numbers.

Every function uses the same normalization as :func:`brute_force` with its
default arguments.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product
from math import comb, factorial, prod
from typing import Iterable

from ..errors import InconsistencyError, PreconditionError
from ..partitions import (
    Partition,
    aut_order,
    hook_content_counts,
    partitions_of,
    shifted_power_sum,
)
from ..series import UnivariateSeries, sinhc_series, xi
from .common import check_pair, r_value

__all__ = [
    "one_part",
    "one_part_sinh",
    "one_part_xi",
    "one_part_closed",
    "diagonal",
    "two_two",
    "genus0_mparts",
    "closed_form",
    "CLOSED_GENUS_MAX",
]

CLOSED_GENUS_MAX = 5


def _one_part_setup(g: int, beta) -> tuple[Partition, int, int]:
    beta = Partition(beta)
    if not beta:
        raise PreconditionError("beta must be non-empty")
    d = beta.size
    return beta, d, r_value(g, (d,), beta)


def one_part_sinh(g: int, beta: Iterable[int]) -> Fraction:
    """One-part number from the product of ``sinh(kt/2)/(kt/2)`` powers."""
    beta, d, r = _one_part_setup(g, beta)
    series = UnivariateSeries.constant(1, 2 * g)
    for k, c in hook_content_counts(beta).items():
        series = series * sinhc_series(Fraction(k, 2), 2 * g) ** c
    return factorial(r) * Fraction(d) ** (r - 1) * series[2 * g]


def one_part_xi(g: int, beta: Iterable[int]) -> Fraction:
    """One-part number as a sum over partitions of ``g`` weighted by ``xi``."""
    beta, d, r = _one_part_setup(g, beta)
    total = Fraction(0)
    for lam in partitions_of(g):
        term = Fraction(1, aut_order(lam))
        for part in lam:
            term *= xi(2 * part) * shifted_power_sum(beta, 2 * part)
        total += term
    return factorial(r) * Fraction(d) ** (r - 1) / 2 ** (2 * g) * total


def one_part(g: int, beta: Iterable[int]) -> Fraction:
    """Number for ``alpha = (d)``; both expansions are computed and compared."""
    first, second = one_part_sinh(g, beta), one_part_xi(g, beta)
    if first != second:
        raise InconsistencyError(f"one-part expansions disagree at g={g}, beta={tuple(beta)}")
    return first


def one_part_closed(g: int, beta: Iterable[int]) -> Fraction:
    """Polynomial closed forms in ``d`` and shifted power sums, for ``g <= 5``."""
    beta = Partition(beta)
    if not 0 <= g <= CLOSED_GENUS_MAX:
        raise PreconditionError(f"closed forms are tabulated for 0 <= g <= {CLOSED_GENUS_MAX}")
    if not beta:
        raise PreconditionError("beta must be non-empty")
    n, d = len(beta), Fraction(beta.size)
    s = {j: shifted_power_sum(beta, 2 * j) for j in range(1, 6)}
    if g == 0:
        return factorial(n - 1) * d ** (n - 2)
    if g == 1:
        return Fraction(factorial(n + 1), 24) * d**n * s[1]
    if g == 2:
        return Fraction(factorial(n + 3), 5760) * d ** (n + 2) * (5 * s[1] ** 2 - 2 * s[2])
    if g == 3:
        poly = 16 * s[3] - 42 * s[1] * s[2] + 35 * s[1] ** 3
        return Fraction(factorial(n + 5), 2**10 * 3**4 * 5 * 7) * d ** (n + 4) * poly
    if g == 4:
        poly = (
            Fraction(-s[4], 37800)
            + Fraction(s[1] * s[3], 17010)
            + Fraction(s[2] ** 2, 64800)
            - Fraction(s[1] ** 2 * s[2], 12960)
            + Fraction(s[1] ** 4, 31104)
        )
        return Fraction(factorial(n + 7), 2**8) * d ** (n + 6) * poly
    poly = (
        Fraction(s[5], 467775)
        - Fraction(s[1] * s[4], 226800)
        - Fraction(s[2] * s[3], 510300)
        + Fraction(s[1] ** 2 * s[3], 204120)
        + Fraction(s[1] * s[2] ** 2, 388800)
        - Fraction(s[1] ** 3 * s[2], 233280)
        + Fraction(s[1] ** 5, 933120)
    )
    return Fraction(factorial(n + 9), 2**10) * d ** (n + 8) * poly


def diagonal(g: int, d: int) -> Fraction:
    """Number for ``alpha = beta = (d)``."""
    if g < 0 or d < 1:
        raise PreconditionError("need g >= 0 and d >= 1")
    total = sum(Fraction(2 * j - d + 1, 2) ** (2 * g) for j in range(d))
    return Fraction(d) ** (2 * g - 2) * total


def two_two(g: int, alpha: Iterable[int], beta: Iterable[int]) -> Fraction:
    """Number for two-part ``alpha`` and ``beta`` with four distinct parts.

    Parts are read in increasing order; the smallest of the four must be
    in ``alpha``.
    """
    alpha, beta = check_pair(alpha, beta)
    if len(alpha) != 2 or len(beta) != 2:
        raise PreconditionError("alpha and beta must each have exactly two parts")
    a1, a2 = sorted(alpha)
    b1, b2 = sorted(beta)
    if g < 0:
        raise PreconditionError("genus must be non-negative")
    if len({a1, a2, b1, b2}) != 4:
        raise PreconditionError("the four parts must be distinct")
    if a1 > b1:
        raise PreconditionError("the smallest part must belong to alpha")
    d = a1 + a2
    half = comb(d + 1, 2)
    e = 2 * g + 2
    total = sum((half - d * i) ** e - (half - d * i - a2 * b1) ** e for i in range(1, a1 + 1))
    return Fraction(2 * total, a1 * a2 * b1 * b2)


def _splits(beta: Partition, bins: int):
    """Ordered tuples of ``bins`` sub-multisets whose union is ``beta``."""
    items = sorted(Counter(beta).items(), reverse=True)
    per_value = []
    for value, mult in items:
        choices = []
        for combo in product(range(mult + 1), repeat=bins):
            if sum(combo) == mult:
                choices.append(combo)
        per_value.append((value, choices))
    for pick in product(*(choices for _, choices in per_value)):
        parts = [[] for _ in range(bins)]
        for (value, _), combo in zip(per_value, pick):
            for j, k in enumerate(combo):
                parts[j].extend([value] * k)
        yield [Partition(p) for p in parts]


def genus0_mparts(alpha: Iterable[int], beta: Iterable[int]) -> Fraction:
    """Genus-zero numbers with ``alpha`` of length two or three."""
    alpha, beta = check_pair(alpha, beta)
    m = len(alpha)
    if m not in (2, 3):
        raise PreconditionError("alpha must have two or three parts")
    d = alpha.size
    r = r_value(0, alpha, beta)
    total = Fraction(0)
    for rho, *gammas in _splits(beta, m + 1):
        if not rho or any(gam.size >= a for gam, a in zip(gammas, alpha)):
            continue
        term = Fraction(factorial(len(rho)) * prod(rho), aut_order(rho))
        for gam, a in zip(gammas, alpha):
            term *= Fraction(a - gam.size) * Fraction(a) ** (len(gam) - 1) / aut_order(gam)
        total += term
    scale = aut_order(beta) * factorial(r)
    return total * scale / d if m == 2 else total * scale


def closed_form(g: int, alpha: Iterable[int], beta: Iterable[int]) -> tuple[Fraction, str]:
    """Value from the first closed expression that applies, with its name.

    The number is symmetric in ``alpha`` and ``beta``, so each expression is
    also tried with the two swapped.  Raises :class:`PreconditionError` when
    none applies.
    """
    alpha, beta = check_pair(alpha, beta)
    r_value(g, alpha, beta)
    for a, b in ((alpha, beta), (beta, alpha)):
        if len(a) == 1:
            return one_part(g, b), "one-part"
    for a, b in ((alpha, beta), (beta, alpha)):
        if len(a) == 2 and len(b) == 2 and len(set(a + b)) == 4 and min(a) < min(b):
            return two_two(g, a, b), "two-part"
    if g == 0:
        for a, b in ((alpha, beta), (beta, alpha)):
            if len(a) in (2, 3):
                return genus0_mparts(a, b), "genus0"
    raise PreconditionError("no closed expression applies to this input")
