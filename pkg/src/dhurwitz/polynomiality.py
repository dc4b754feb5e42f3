"""Polynomial behaviour of Hurwitz numbers along rays ``t -> (t alpha, t beta)``.

A ray through the origin stays inside one chamber, so the values along it
are an honest polynomial in ``t``.  Fits are exact: forward differences are
computed in rationals and a degree is only accepted when at least two
consecutive differences of the next order vanish.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from .errors import InconclusiveFitError, PreconditionError
from .hurwitz import brute_force, connected, genus0_mparts, one_part, r_value
from .partitions import Partition, aut_order, format_rational, partitions_with_length
from .symbols import EXCLUDED, one_part_polynomial

__all__ = [
    "METHODS",
    "RaySample",
    "ray_samples",
    "fit_degree",
    "ray_polynomial",
    "degree_window",
    "DegreeReport",
    "degree_report",
    "check_degree_bounds",
    "ChamberReport",
    "check_chamber_formula_022",
    "OnePartWindowReport",
    "check_one_part_window",
    "BATTERY",
    "run_battery",
    "reports_to_csv",
    "reports_to_json",
]


def _genus0(g: int, alpha, beta) -> Fraction:
    if g != 0:
        raise PreconditionError("the genus-0 formula needs g = 0")
    return genus0_mparts(alpha, beta)


def _one_part(g: int, alpha, beta) -> Fraction:
    if len(alpha) != 1:
        raise PreconditionError("the one-part formula needs alpha = (d)")
    return one_part(g, beta)


METHODS: dict[str, Callable] = {
    "character": lambda g, a, b: connected(g, a, b),
    "brute": lambda g, a, b: brute_force(g, a, b, max_degree=12),
    "one-part": _one_part,
    "genus0": _genus0,
}


@dataclass(frozen=True)
class RaySample:
    genus: int
    alpha: Partition
    beta: Partition
    values: tuple
    method: str

    @property
    def m(self) -> int:
        return self.alpha.length

    @property
    def n(self) -> int:
        return self.beta.length


def ray_samples(g: int, alpha: Iterable[int], beta: Iterable[int], t_max: int, method: str = "character") -> RaySample:
    """Values at ``t = 1 .. t_max``, all by one method."""
    if method not in METHODS:
        raise PreconditionError(f"unknown method {method!r}; choose from {sorted(METHODS)}")
    if t_max < 1:
        raise PreconditionError("t_max must be at least 1")
    alpha, beta = Partition(alpha), Partition(beta)
    r_value(g, alpha, beta)
    compute = METHODS[method]
    values = tuple(
        Fraction(compute(g, tuple(t * a for a in alpha), tuple(t * b for b in beta)))
        for t in range(1, t_max + 1)
    )
    return RaySample(g, alpha, beta, values, method)


def _difference_rows(values: Sequence[Fraction]) -> list[list[Fraction]]:
    rows = [list(values)]
    while len(rows[-1]) > 1:
        prev = rows[-1]
        rows.append([b - a for a, b in zip(prev, prev[1:])])
    return rows


def fit_degree(sample: RaySample | Sequence) -> tuple[int, Fraction]:
    """Degree and leading coefficient of the polynomial through the samples.

    The samples are values at ``t = 1, 2, ...``.  The identically zero
    sequence has degree ``-1`` and leading coefficient 0.
    """
    values = [Fraction(v) for v in (sample.values if isinstance(sample, RaySample) else sample)]
    rows = _difference_rows(values)
    for degree in range(-1, len(values)):
        nxt = rows[degree + 1]
        if len(nxt) < 2:
            break
        if all(v == 0 for v in nxt):
            if degree < 0:
                return -1, Fraction(0)
            return degree, rows[degree][0] / factorial(degree)
    raise InconclusiveFitError(
        f"no polynomial fit confirmed by two vanishing differences among {len(values)} samples"
    )


def ray_polynomial(sample: RaySample | Sequence) -> list[Fraction]:
    """Monomial coefficients ``[c_0, c_1, ...]`` of the fitted polynomial in ``t``."""
    values = [Fraction(v) for v in (sample.values if isinstance(sample, RaySample) else sample)]
    degree, _ = fit_degree(values)
    if degree < 0:
        return []
    rows = _difference_rows(values)
    coeffs = [Fraction(0)] * (degree + 1)
    # Newton form at nodes 1, 2, ...: sum_k D^k(1) * binom(t - 1, k)
    basis = [Fraction(1)]
    for k in range(degree + 1):
        if k:
            # multiply by (t - k) / k
            shifted = [Fraction(0)] + basis
            basis = [(shifted[i] - k * (basis[i] if i < len(basis) else 0)) / k for i in range(len(shifted))]
        for i, c in enumerate(basis):
            coeffs[i] += rows[k][0] * c
    return coeffs


def degree_window(g: int, m: int, n: int) -> tuple[int, int]:
    """Lowest and highest degree expected in a chamber polynomial."""
    return 2 * g - 3 + m + n, 4 * g - 3 + m + n


@dataclass
class DegreeReport:
    genus: int
    alpha: tuple
    beta: tuple
    method: str
    samples: int
    degree: int
    leading: Fraction
    degrees_present: list
    window: tuple
    one_part_window: bool | None = None

    @property
    def top_degree_ok(self) -> bool:
        return self.degree == self.window[1] and self.leading != 0

    @property
    def within_window(self) -> bool:
        low, high = self.window
        return all(low <= k <= high for k in self.degrees_present)

    @property
    def passed(self) -> bool:
        return self.top_degree_ok and self.within_window and self.one_part_window is not False

    def row(self) -> dict:
        return {
            "genus": self.genus,
            "alpha": list(self.alpha),
            "beta": list(self.beta),
            "method": self.method,
            "samples": self.samples,
            "degree": self.degree,
            "leading": format_rational(self.leading),
            "degrees_present": self.degrees_present,
            "window": list(self.window),
            "top_degree_ok": self.top_degree_ok,
            "within_window": self.within_window,
            "passed": self.passed,
        }

    def summary(self) -> str:
        state = "ok" if self.passed else "FAILED"
        a = ",".join(map(str, self.alpha))
        b = ",".join(map(str, self.beta))
        return (
            f"ray g={self.genus} ({a})/({b}): degree {self.degree}, leading {self.leading}, "
            f"degrees {self.degrees_present}, window {list(self.window)} ({state})"
        )


def degree_report(sample: RaySample) -> DegreeReport:
    """Fit a sampled ray and compare its degrees with the expected window."""
    window = degree_window(sample.genus, sample.m, sample.n)
    degree, leading = fit_degree(sample)
    coeffs = ray_polynomial(sample)
    report = DegreeReport(
        genus=sample.genus,
        alpha=tuple(sample.alpha),
        beta=tuple(sample.beta),
        method=sample.method,
        samples=len(sample.values),
        degree=degree,
        leading=leading,
        degrees_present=[k for k, c in enumerate(coeffs) if c],
        window=window,
    )
    if sample.m == 1 and (sample.genus, sample.n) not in EXCLUDED:
        report.one_part_window = check_one_part_window(sample.genus, sample.n).passed
    return report


def check_degree_bounds(
    g: int, alpha: Iterable[int], beta: Iterable[int], t_max: int | None = None, method: str = "character"
) -> DegreeReport:
    """Sample the ray with ``t_max`` points (default: top degree + 3) and fit it."""
    alpha, beta = Partition(alpha), Partition(beta)
    if t_max is None:
        t_max = degree_window(g, alpha.length, beta.length)[1] + 3
    return degree_report(ray_samples(g, alpha, beta, t_max, method))


@dataclass
class OnePartWindowReport:
    genus: int
    n: int
    degrees: list
    window: tuple
    samples_checked: int
    sample_mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        low, high = self.window
        return (
            bool(self.degrees)
            and all(low <= k <= high for k in self.degrees)
            and high in self.degrees
            and not self.sample_mismatches
        )

    def summary(self) -> str:
        state = "ok" if self.passed else "FAILED"
        return (
            f"one-part g={self.genus} n={self.n}: degrees {self.degrees}, window {list(self.window)}, "
            f"{self.samples_checked} values compared ({state})"
        )


def check_one_part_window(g: int, n: int, d_max: int = 8) -> OnePartWindowReport:
    """The one-part numbers are one global polynomial with degrees in the window.

    The polynomial ``H / (r! d)`` is compared with the character-method
    value at every ``beta`` of length ``n`` and size at most ``d_max``, and
    the degrees of ``H = r! d * poly`` are tested against the window.
    """
    if (g, n) in EXCLUDED:
        raise PreconditionError(f"no polynomial for (g, n) = {(g, n)}")
    poly = one_part_polynomial(g, n)
    degrees = sorted(k + 1 for k in poly.total_degrees())
    report = OnePartWindowReport(g, n, degrees, degree_window(g, 1, n), 0)
    r_fact = factorial(2 * g - 1 + n)
    for d in range(n, d_max + 1):
        for beta in partitions_with_length(d, n):
            expected = connected(g, (d,), beta)
            got = r_fact * d * poly.evaluate(beta)
            report.samples_checked += 1
            if got != expected:
                report.sample_mismatches.append((tuple(beta), got, expected))
    return report


@dataclass
class ChamberReport:
    d_max: int
    checked: int = 0
    canonical_mismatches: list = field(default_factory=list)
    divided_matches_trivial_aut: int = 0
    divided_matches_nontrivial_aut: int = 0
    nontrivial_aut: int = 0

    @property
    def passed(self) -> bool:
        return self.checked > 0 and not self.canonical_mismatches

    def summary(self) -> str:
        state = "ok" if self.passed else "FAILED"
        trivial = self.checked - self.nontrivial_aut
        return (
            f"2max formula for d<={self.d_max}: {self.checked} pairs; canonical normalization "
            f"{self.checked - len(self.canonical_mismatches)}/{self.checked} agree; "
            f"Aut-divided agrees on {self.divided_matches_trivial_aut}/{trivial} pairs with trivial Aut "
            f"and {self.divided_matches_nontrivial_aut}/{self.nontrivial_aut} with non-trivial Aut ({state})"
        )


def check_chamber_formula_022(d_max: int) -> ChamberReport:
    """Genus 0, two parts on each side: the number equals ``2 max`` of the parts.

    Both the canonical value and the value divided by ``|Aut alpha||Aut beta|``
    are compared.  The report passes when the canonical one always agrees.
    """
    report = ChamberReport(d_max)
    for d in range(2, d_max + 1):
        pairs = partitions_with_length(d, 2)
        for alpha in pairs:
            for beta in pairs:
                target = 2 * max(alpha + beta)
                value = connected(0, alpha, beta)
                auts = aut_order(alpha) * aut_order(beta)
                report.checked += 1
                if value != target:
                    report.canonical_mismatches.append((tuple(alpha), tuple(beta), value, target))
                divided_ok = value / auts == target
                if auts == 1:
                    report.divided_matches_trivial_aut += divided_ok
                else:
                    report.nontrivial_aut += 1
                    report.divided_matches_nontrivial_aut += divided_ok
    return report


BATTERY = (
    (0, (2, 1), (2, 1)),
    (0, (2, 1), (1, 1, 1)),
    (0, (1, 1, 1), (1, 1, 1)),
    (1, (2,), (1, 1)),
    (1, (1, 1), (1, 1)),
)


def run_battery(rays: Iterable = BATTERY, method: str = "character") -> list[DegreeReport]:
    return [check_degree_bounds(g, a, b, method=method) for g, a, b in rays]


def reports_to_json(reports: Iterable[DegreeReport]) -> str:
    return json.dumps([r.row() for r in reports], indent=2)


def reports_to_csv(reports: Iterable[DegreeReport]) -> str:
    rows = [r.row() for r in reports]
    out = io.StringIO()
    if rows:
        writer = csv.DictWriter(out, fieldnames=list(rows[0]))
        writer.writeheader()
        for row in rows:
            writer.writerow({k: (",".join(map(str, v)) if isinstance(v, list) else v) for k, v in row.items()})
    return out.getvalue()
