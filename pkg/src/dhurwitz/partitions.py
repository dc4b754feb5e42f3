"""Integer partitions and the small combinatorial statistics attached to them.

Partitions are immutable tuples kept in weakly decreasing order, so they
hash and compare structurally and can be used directly as dictionary keys.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Iterator

from .errors import PreconditionError

__all__ = [
    "Partition",
    "PaddedPartition",
    "partitions_of",
    "padded_partitions",
    "partitions_with_length",
    "aut_order",
    "class_size",
    "conjugate",
    "shifted_power_sum",
    "hook_content_counts",
    "sub_multisets",
    "multiset_union",
    "multiset_difference",
    "format_rational",
    "parse_rational",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    The constructor accepts parts in any order and sorts them.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise PreconditionError(f"partition parts must be positive: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def __str__(self) -> str:
        return ",".join(map(str, self))

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Read a comma separated list such as ``"3,8"``."""
        text = text.strip()
        if not text:
            return cls()
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise PreconditionError(f"cannot parse partition {text!r}") from exc


class PaddedPartition(tuple):
    """A weakly decreasing tuple of non-negative integers of fixed length."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "PaddedPartition":
        parts = sorted((int(p) for p in parts), reverse=True)
        if parts and parts[-1] < 0:
            raise PreconditionError(f"padded partition parts must be >= 0: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"PaddedPartition({tuple(self)!r})"


def _decreasing(total: int, largest: int, length: int | None) -> Iterator[tuple]:
    # parts <= largest, in reverse lexicographic order; fixed length if given
    if total == 0:
        if length in (None, 0):
            yield ()
        return
    if length == 0:
        return
    for first in range(min(total, largest), 0, -1):
        if length is not None and first * length < total:
            break
        rest = None if length is None else length - 1
        for tail in _decreasing(total - first, first, rest):
            yield (first,) + tail


@lru_cache(maxsize=None)
def _partitions_cached(d: int) -> tuple:
    return tuple(Partition(p) for p in _decreasing(d, d, None))


def partitions_of(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse lexicographic order."""
    if d < 0:
        raise PreconditionError("d must be non-negative")
    return list(_partitions_cached(d))


def partitions_with_length(d: int, n: int) -> list[Partition]:
    """Partitions of ``d`` with exactly ``n`` parts."""
    if d < 0 or n < 0:
        raise PreconditionError("d and n must be non-negative")
    return [Partition(p) for p in _decreasing(d, d, n)]


def padded_partitions(s: int, n: int) -> list[PaddedPartition]:
    """Weakly decreasing length-``n`` tuples of non-negative integers summing to ``s``."""
    if s < 0 or n < 0:
        raise PreconditionError("s and n must be non-negative")

    def rec(total, largest, slots):
        if slots == 0:
            if total == 0:
                yield ()
            return
        for first in range(min(total, largest), -1, -1):
            if first * slots < total:
                break
            for tail in rec(total - first, first, slots - 1):
                yield (first,) + tail

    return [PaddedPartition(p) for p in rec(s, s, n)]


def aut_order(parts: Iterable[int]) -> int:
    """Order of the automorphism group: product of factorials of multiplicities.

    Zero parts of a padded partition count like any other value.
    """
    return prod(factorial(m) for m in Counter(parts).values())


def class_size(mu: Partition) -> int:
    """Number of permutations of cycle type ``mu`` in the symmetric group."""
    return factorial(sum(mu)) // (aut_order(mu) * prod(mu))


def conjugate(lam: Iterable[int]) -> Partition:
    """Transpose of the Young diagram."""
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > i) for i in range(lam[0]))


def shifted_power_sum(beta: Iterable[int], exponent: int) -> int:
    """``-1 + sum(b**exponent)`` over the parts of ``beta``; the exponent is even."""
    if exponent < 2 or exponent % 2:
        raise PreconditionError("exponent must be a positive even integer")
    return -1 + sum(b**exponent for b in beta)


def hook_content_counts(beta: Partition) -> dict[int, int]:
    """Exponents ``c_i``: the multiplicity of ``i`` in ``beta``, minus one for ``i = 1``.

    The exponent of 1 is always present and may be negative or zero; other
    values appear only when they are parts.
    """
    counts = Counter(beta)
    counts[1] -= 1
    return dict(sorted(counts.items()))


def sub_multisets(parts: Iterable[int]) -> list[Partition]:
    """Every sub-multiset of ``parts``, including the empty one and the whole."""
    items = sorted(Counter(parts).items(), reverse=True)
    out = [()]
    for value, mult in items:
        out = [p + (value,) * k for p in out for k in range(mult + 1)]
    return [Partition(p) for p in out]


def multiset_union(a: Iterable[int], b: Iterable[int]) -> Partition:
    return Partition(tuple(a) + tuple(b))


def multiset_difference(a: Iterable[int], b: Iterable[int]) -> Partition | None:
    """``a`` minus ``b`` as multisets, or ``None`` if ``b`` is not contained in ``a``."""
    rest = Counter(a)
    rest.subtract(Counter(b))
    if any(v < 0 for v in rest.values()):
        return None
    return Partition(rest.elements())


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise PreconditionError(f"cannot parse rational {text!r}") from exc
