"""Character-sum Hurwitz numbers and the generating series built from them.

Series are stored as dictionaries keyed by ``(alpha, beta, r)`` with value
``H / (r! |Aut alpha| |Aut beta|)``; the key stands for the monomial
``p_alpha q_beta u^l(beta) t^r z^|alpha|``.  With this normalization the
passage between possibly disconnected and connected counts is the ordinary
logarithm of the series, where monomials multiply by taking unions of the
index multisets and adding the ``r`` exponents.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Iterator

from ..characters import character, eta
from ..errors import BoundError, PreconditionError
from ..partitions import (
    Partition,
    aut_order,
    class_size,
    partitions_of,
    sub_multisets,
)
from .common import check_pair, genus_from_r, r_value

__all__ = [
    "disconnected_character",
    "disconnected",
    "SeriesTable",
    "build_series_table",
    "series_log",
    "series_exp",
    "connected",
    "connected_r",
]

Key = tuple  # (Partition, Partition, int)


@lru_cache(maxsize=4096)
def _character_terms(alpha: Partition, beta: Partition) -> tuple:
    d = alpha.size
    terms = []
    for lam in partitions_of(d):
        prod = character(lam, alpha) * character(lam, beta)
        if prod:
            terms.append((eta(lam), prod))
    weight = Fraction(class_size(alpha) * class_size(beta), factorial(d) ** 2)
    return weight, tuple(terms)


def disconnected_character(alpha: Iterable[int], beta: Iterable[int], r: int) -> Fraction:
    """Possibly disconnected count after ``r`` transpositions, via characters."""
    alpha, beta = check_pair(alpha, beta)
    if r < 0:
        raise PreconditionError("r must be non-negative")
    weight, terms = _character_terms(alpha, beta)
    total = sum(e**r * prod for e, prod in terms)
    return aut_order(alpha) * aut_order(beta) * weight * total


def disconnected(g: int, alpha: Iterable[int], beta: Iterable[int]) -> Fraction:
    r = r_value(g, alpha, beta)
    return Fraction(0) if r < 0 else disconnected_character(alpha, beta, r)


def _normalizer(key: Key) -> int:
    alpha, beta, r = key
    return factorial(r) * aut_order(alpha) * aut_order(beta)


def _union(a: tuple, b: tuple) -> Partition:
    return Partition(a + b)


def _multiply(left: dict, right: dict, keep: Callable[[Key], bool]) -> dict:
    out: dict = defaultdict(Fraction)
    for (a1, b1, r1), c1 in left.items():
        for (a2, b2, r2), c2 in right.items():
            key = (_union(a1, a2), _union(b1, b2), r1 + r2)
            if keep(key):
                out[key] += c1 * c2
    return {k: v for k, v in out.items() if v}


def series_log(series: dict, keep: Callable[[Key], bool], max_power: int) -> dict:
    """``log(1 + X)`` truncated by ``keep``; ``X`` has no constant term."""
    result: dict = defaultdict(Fraction)
    power = dict(series)
    for k in range(1, max_power + 1):
        sign = Fraction((-1) ** (k - 1), k)
        for key, c in power.items():
            result[key] += sign * c
        if k < max_power:
            power = _multiply(power, series, keep)
            if not power:
                break
    return {k: v for k, v in result.items() if v}


def series_exp(series: dict, keep: Callable[[Key], bool], max_power: int) -> dict:
    """``exp(Y) - 1`` truncated by ``keep``; ``Y`` has no constant term."""
    result: dict = defaultdict(Fraction)
    power = dict(series)
    for k in range(1, max_power + 1):
        inv = Fraction(1, factorial(k))
        for key, c in power.items():
            result[key] += inv * c
        if k < max_power:
            power = _multiply(power, series, keep)
            if not power:
                break
    return {k: v for k, v in result.items() if v}


class SeriesTable:
    """Coefficients for every ``|alpha| = |beta| <= d_max`` and ``r <= r_max``.

    ``connected`` records whether the entries count connected covers.  Zero
    coefficients are not stored; lookups inside the bounds return zero.
    """

    def __init__(self, coeffs: dict, d_max: int, r_max: int, connected: bool):
        self._coeffs = {k: Fraction(v) for k, v in coeffs.items() if v}
        self.d_max = d_max
        self.r_max = r_max
        self.connected = connected
        self._partner: SeriesTable | None = None

    def _keep(self, key: Key) -> bool:
        return key[0].size <= self.d_max and key[2] <= self.r_max

    def coefficient(self, alpha, beta, r: int) -> Fraction:
        alpha, beta = check_pair(alpha, beta)
        if alpha.size > self.d_max or r > self.r_max or r < 0:
            raise BoundError(
                f"key ({alpha}, {beta}, r={r}) lies outside d <= {self.d_max}, r <= {self.r_max}"
            )
        return self._coeffs.get((alpha, beta, r), Fraction(0))

    def number(self, alpha, beta, r: int) -> Fraction:
        """The Hurwitz number itself, undoing the series normalization."""
        alpha, beta = check_pair(alpha, beta)
        return self.coefficient(alpha, beta, r) * _normalizer((alpha, beta, r))

    def __getitem__(self, key: Key) -> Fraction:
        return self.coefficient(*key)

    def __len__(self) -> int:
        return len(self._coeffs)

    def items(self) -> Iterator:
        return iter(sorted(self._coeffs.items(), key=lambda kv: (kv[0][0].size, kv[0][2], kv[0])))

    def raw(self) -> dict:
        return dict(self._coeffs)

    def keys_in_bounds(self) -> Iterator[Key]:
        for d in range(1, self.d_max + 1):
            for alpha in partitions_of(d):
                for beta in partitions_of(d):
                    for r in range(self.r_max + 1):
                        yield alpha, beta, r

    def log(self) -> "SeriesTable":
        """Connected table from a possibly disconnected one (memoized)."""
        if self.connected:
            raise PreconditionError("table already holds connected counts")
        if self._partner is None:
            coeffs = series_log(self._coeffs, self._keep, self.d_max)
            self._partner = SeriesTable(coeffs, self.d_max, self.r_max, True)
            self._partner._partner = self
        return self._partner

    def exp(self) -> "SeriesTable":
        """Possibly disconnected table from a connected one."""
        if not self.connected:
            raise PreconditionError("table already holds disconnected counts")
        coeffs = series_exp(self._coeffs, self._keep, self.d_max)
        return SeriesTable(coeffs, self.d_max, self.r_max, False)

    def rows(self) -> list[dict]:
        """One row per key in bounds, zeros included; ``genus`` is None when no genus fits."""
        out = []
        for alpha, beta, r in self.keys_in_bounds():
            c = self._coeffs.get((alpha, beta, r), Fraction(0))
            genus = genus_from_r(r, alpha, beta)
            out.append(
                {
                    "alpha": list(alpha),
                    "beta": list(beta),
                    "r": r,
                    "genus": genus,
                    "coefficient": c,
                    "value": c * _normalizer((alpha, beta, r)),
                }
            )
        return out


def build_series_table(d_max: int, r_max: int) -> SeriesTable:
    """Possibly disconnected character-sum table."""
    if d_max < 1 or r_max < 0:
        raise PreconditionError("need d_max >= 1 and r_max >= 0")
    coeffs = {}
    for d in range(1, d_max + 1):
        for alpha in partitions_of(d):
            for beta in partitions_of(d):
                for r in range(r_max + 1):
                    if (r + len(alpha) + len(beta)) % 2:
                        continue
                    key = (alpha, beta, r)
                    coeffs[key] = disconnected_character(alpha, beta, r) / _normalizer(key)
    return SeriesTable(coeffs, d_max, r_max, False)


def _contained(small: Partition, big: Counter) -> bool:
    need = Counter(small)
    return all(big[v] >= m for v, m in need.items())


def connected_r(alpha, beta, r: int) -> Fraction:
    """Connected count after ``r`` transpositions, by a logarithm restricted
    to the monomials that divide the target."""
    alpha, beta = check_pair(alpha, beta)
    if r < 0:
        return Fraction(0)
    target_a, target_b = Counter(alpha), Counter(beta)
    subs_b = [b for b in sub_multisets(beta) if b]
    local = {}
    for a in sub_multisets(alpha):
        if not a:
            continue
        for b in subs_b:
            if a.size != b.size:
                continue
            for rr in range(r + 1):
                if (rr + len(a) + len(b)) % 2 == 0:
                    key = (a, b, rr)
                    val = disconnected_character(a, b, rr)
                    if val:
                        local[key] = val / _normalizer(key)

    def keep(key: Key) -> bool:
        return key[2] <= r and _contained(key[0], target_a) and _contained(key[1], target_b)

    logged = series_log(local, keep, len(alpha))
    target = (alpha, beta, r)
    return logged.get(target, Fraction(0)) * _normalizer(target)


def connected(
    g: int,
    alpha: Iterable[int],
    beta: Iterable[int],
    table: SeriesTable | None = None,
    *,
    divide_by_automorphisms: bool = False,
) -> Fraction:
    """Connected double Hurwitz number by the character method.

    Without a table the logarithm is taken over the divisors of the target
    monomial only.  With a table the key must lie inside its bounds.
    """
    alpha, beta = check_pair(alpha, beta)
    r = r_value(g, alpha, beta)
    if r < 0:
        value = Fraction(0)
    elif table is None:
        value = connected_r(alpha, beta, r)
    else:
        source = table if table.connected else table.log()
        value = source.number(alpha, beta, r)
    if divide_by_automorphisms:
        value /= aut_order(alpha) * aut_order(beta)
    return value
