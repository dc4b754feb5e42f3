"""Coefficient-wise check of the cut-and-join equation on a connected table.

In the ``r``-graded normalization the Euler-type operator on the left acts
on the monomial of key ``(alpha, beta, r)`` as multiplication by ``r``.  The
three terms on the right (two sheets joining, one sheet cutting, a sheet
joining to itself) all raise ``r`` by one, so the right side at ``r`` only
involves table entries at ``r - 1``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from fractions import Fraction

from ..partitions import Partition
from .tables import SeriesTable, build_series_table

__all__ = ["JoinCutReport", "join_cut_rhs", "verify_join_cut"]


def _remove(parts: tuple, *values: int) -> tuple:
    rest = list(parts)
    for v in values:
        rest.remove(v)
    return tuple(rest)


def join_cut_rhs(coeffs: dict, d_max: int, r_max: int) -> dict:
    """Right-hand side of the equation, keyed like the table."""
    out: dict = defaultdict(Fraction)
    items = list(coeffs.items())
    for (a, b, r), c in items:
        if r + 1 > r_max:
            continue
        mult = Counter(a)
        for k, m in mult.items():
            rest = _remove(a, k)
            for i in range(1, k):
                key = (Partition(rest + (i, k - i)), b, r + 1)
                out[key] += Fraction(k * m, 2) * c
        for i, mi in mult.items():
            for j, mj in mult.items():
                ways = mi * (mi - 1) if i == j else mi * mj
                if not ways:
                    continue
                key = (Partition(_remove(a, i, j) + (i + j,)), b, r + 1)
                out[key] += Fraction(i * j * ways, 2) * c
    for (a1, b1, r1), c1 in items:
        d1 = sum(a1)
        for (a2, b2, r2), c2 in items:
            if d1 + sum(a2) > d_max or r1 + r2 + 1 > r_max:
                continue
            beta = Partition(b1 + b2)
            for i, mi in Counter(a1).items():
                for j, mj in Counter(a2).items():
                    alpha = Partition(_remove(a1, i) + _remove(a2, j) + (i + j,))
                    out[(alpha, beta, r1 + r2 + 1)] += Fraction(i * j * mi * mj, 2) * c1 * c2
    return {k: v for k, v in out.items() if v}


@dataclass
class JoinCutReport:
    d_max: int
    r_max: int
    checked: int = 0
    mismatches: list = field(default_factory=list)
    initial_failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches and not self.initial_failures

    def summary(self) -> str:
        state = "ok" if self.passed else "FAILED"
        return (
            f"join-cut d<={self.d_max} r<={self.r_max}: {self.checked} coefficients, "
            f"{len(self.mismatches)} mismatches, {len(self.initial_failures)} initial failures ({state})"
        )


def verify_join_cut(d_max: int, r_max: int, table: SeriesTable | None = None) -> JoinCutReport:
    """Check every coefficient with ``|alpha| <= d_max`` and ``r <= r_max``."""
    if table is None:
        table = build_series_table(d_max, r_max)
    conn = table if table.connected else table.log()
    d_max, r_max = min(d_max, conn.d_max), min(r_max, conn.r_max)
    coeffs = {k: v for k, v in conn.raw().items() if k[0].size <= d_max and k[2] <= r_max}
    rhs = join_cut_rhs(coeffs, d_max, r_max)
    report = JoinCutReport(d_max, r_max)
    for key in conn.keys_in_bounds():
        alpha, beta, r = key
        if alpha.size > d_max or r > r_max:
            continue
        lhs = r * coeffs.get(key, Fraction(0))
        right = rhs.get(key, Fraction(0))
        report.checked += 1
        if lhs != right:
            report.mismatches.append((key, lhs, right))
    for i in range(1, d_max + 1):
        got = conn.coefficient((i,), (i,), 0)
        if got != Fraction(1, i):
            report.initial_failures.append((i, got))
    return report
