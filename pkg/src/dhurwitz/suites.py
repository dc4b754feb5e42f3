"""Verification suites shared by the ``verify`` command and the test suite.

Each suite returns a :class:`SuiteResult` holding one :class:`Check` per
identity tested.  Failed checks carry both sides of the identity.

Three identities are stored in two forms: the form in which they are
usually quoted and a corrected form that agrees with direct computation.
Suites use the corrected form unless ``as_printed=True``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .hurwitz import (
    EXPONENTIAL_FORMS,
    brute_force,
    build_series_table,
    connected,
    diagonal,
    exponential_form,
    genus_from_r,
    one_part,
    one_part_closed,
    one_part_sinh,
    one_part_xi,
    two_two,
    verify_join_cut,
)
from .hurwitz.formulas import CLOSED_GENUS_MAX
from .lagrange import (
    verify_ansatz,
    verify_genus0_u,
    verify_lagrange_forms,
    verify_w_expansion,
    verify_w_identities,
    verify_wittansx,
)
from .partitions import format_rational, padded_partitions, partitions_of, partitions_with_length
from .polynomiality import BATTERY, check_chamber_formula_022, check_degree_bounds, check_one_part_window
from .series import (
    bernoulli,
    bernoulli_from_series,
    f_coeff,
    f_from_series,
    v_coeff,
    v_from_series,
    xi,
    xi_from_series,
)
from .symbols import (
    EXCLUDED,
    FAMILIES,
    check_dilaton,
    check_string,
    closed_form_exponents,
    closed_form_symbol,
    family_range,
    symbol_def,
    symbol_wittcor,
)

__all__ = ["Check", "SuiteResult", "SUITES", "run_suite"]


@dataclass
class Check:
    label: str
    passed: bool
    left: object = None
    right: object = None

    def describe(self) -> str:
        if self.passed:
            return f"ok    {self.label}"
        return f"FAIL  {self.label}: {_show(self.left)} != {_show(self.right)}"


def _show(value) -> str:
    if isinstance(value, (Fraction, int)):
        return format_rational(value)
    return str(value)


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)

    def add(self, label: str, left, right) -> bool:
        ok = left == right
        self.checks.append(Check(label, ok, left, right))
        return ok

    def require(self, label: str, condition: bool, detail: object = None) -> bool:
        self.checks.append(Check(label, bool(condition), detail, "expected to hold"))
        return bool(condition)

    @property
    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    @property
    def passed(self) -> bool:
        return bool(self.checks) and not self.failures

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return f"{state} {self.name}: {len(self.checks) - len(self.failures)}/{len(self.checks)} checks"

    def report(self, verbose: bool = False) -> str:
        lines = [self.summary()]
        lines += [c.describe() for c in self.checks if verbose or not c.passed]
        return "\n".join(lines)

    def merge(self, other: "SuiteResult") -> "SuiteResult":
        self.checks += other.checks
        return self


def _pair_label(g, alpha, beta) -> str:
    return f"g={g} ({','.join(map(str, alpha))})/({','.join(map(str, beta))})"


# criterion-level suites ------------------------------------------------------


def cross_methods(d_max: int = 5, r_max: int = 6) -> SuiteResult:
    """Character method against brute-force enumeration."""
    result = SuiteResult("cross-methods")
    for d in range(1, d_max + 1):
        parts = partitions_of(d)
        for alpha in parts:
            for beta in parts:
                for r in range(r_max + 1):
                    g = genus_from_r(r, alpha, beta)
                    if g is None or g < 0:
                        continue
                    result.add(
                        f"character = brute {_pair_label(g, alpha, beta)}",
                        connected(g, alpha, beta),
                        brute_force(g, alpha, beta),
                    )
    return result


def one_part_suite(d_max: int = 8, g_max: int = 3, closed_g_max: int = CLOSED_GENUS_MAX) -> SuiteResult:
    """Both one-part expansions, the character method and the closed forms."""
    result = SuiteResult("one-part")
    for d in range(1, d_max + 1):
        for beta in partitions_of(d):
            for g in range(max(g_max, closed_g_max) + 1):
                label = _pair_label(g, (d,), beta)
                sinh_form = one_part_sinh(g, beta)
                if g <= g_max:
                    result.add(f"product form = xi form {label}", sinh_form, one_part_xi(g, beta))
                    result.add(f"one-part = character {label}", sinh_form, connected(g, (d,), beta))
                if g <= closed_g_max:
                    result.add(f"closed form {label}", one_part_closed(g, beta), one_part(g, beta))
    return result


def worked_examples(d_max: int = 11, g_max: int = 2, *, as_printed: bool = False) -> SuiteResult:
    """Exponential-sum forms and the two-part formula for distinct parts."""
    result = SuiteResult("worked-examples" + (" (as printed)" if as_printed else ""))
    for alpha, beta in EXPONENTIAL_FORMS:
        for g in (0, 1):
            result.add(
                f"exponential form {_pair_label(g, alpha, beta)}",
                exponential_form(alpha, beta, g, printed=as_printed),
                connected(g, alpha, beta),
            )
    for d in range(3, d_max + 1):
        pairs = [p for p in partitions_with_length(d, 2) if p[0] != p[1]]
        for alpha in pairs:
            for beta in pairs:
                if len(set(alpha + beta)) != 4 or min(alpha) > min(beta):
                    continue
                for g in range(g_max + 1):
                    result.add(
                        f"two-part formula {_pair_label(g, alpha, beta)}",
                        two_two(g, alpha, beta),
                        connected(g, alpha, beta),
                    )
    return result


def diagonal_suite(d_max: int = 8, g_max: int = 4) -> SuiteResult:
    result = SuiteResult("diagonal")
    for d in range(1, d_max + 1):
        result.add(f"genus 0 diagonal d={d}", diagonal(0, d), Fraction(1, d))
        for g in range(g_max + 1):
            result.add(f"diagonal {_pair_label(g, (d,), (d,))}", diagonal(g, d), connected(g, (d,), (d,)))
    return result


def _balanced_indices(g_max: int, n_max: int):
    for g in range(g_max + 1):
        for n in range(1, n_max + 1):
            if (g, n) in EXCLUDED:
                continue
            for k in range(g + 1):
                total = 4 * g - 3 + n - 2 * k
                if total < 0:
                    continue
                for b in padded_partitions(total, n):
                    yield g, k, tuple(b)


def symbols_suite(g_max: int = 3, n_max: int = 4, family_g_max: int = 4, *, as_printed: bool = False) -> SuiteResult:
    """Both symbol routes, positivity, special values and closed-form families."""
    result = SuiteResult("symbols" + (" (as printed)" if as_printed else ""))
    for g, k, b in _balanced_indices(g_max, n_max):
        label = f"g={g} k={k} b={b}"
        value = symbol_wittcor(g, k, b)
        result.add(f"definition = explicit sum {label}", symbol_def(g, k, b), value)
        result.require(f"non-negative {label}", value >= 0, value)
    result.add("<<tau_2 Lambda_0>>_1", symbol_wittcor(1, 0, (2,)), Fraction(1, 24))
    result.add("<<tau_0 Lambda_2>>_1", symbol_wittcor(1, 1, (0,)), Fraction(1, 24))
    for g in range(1, family_g_max + 1):
        result.add(
            f"top psi value g={g}",
            symbol_wittcor(g, 0, (4 * g - 2,)),
            Fraction(1, 2 ** (2 * g) * factorial(2 * g + 1)),
        )
        half = 2 ** (2 * g - 1)
        result.add(
            f"top lambda value g={g}",
            symbol_wittcor(g, g, (2 * g - 2,)),
            Fraction(half - 1, half * factorial(2 * g)) * abs(bernoulli(2 * g)),
        )
    for family in FAMILIES:
        for g, k, b in family_range(family, family_g_max):
            value = closed_form_symbol(family, g, k, b, as_printed=as_printed)
            exps = closed_form_exponents(family, g, k, b)
            result.add(f"{family} g={g} k={k} b={exps}", value, symbol_wittcor(g, k, exps))
    return result


def string_dilaton_suite(g_max: int = 3, n_max: int = 3, method: str = "wittcor") -> SuiteResult:
    """String and dilaton equations; ``n`` counts the insertions besides the new one.

    Only balanced left-hand sides are listed; the others vanish identically.
    """
    result = SuiteResult("string-dilaton")
    for g in range(g_max + 1):
        for k in range(g + 1):
            for n in range(n_max + 1):
                label = f"g={g} k={k} n={n}"
                string_total = 4 * g - 2 + n - 2 * k
                if string_total >= 0 and not (g == 0 and n < 3):
                    for b in padded_partitions(string_total, n) if n else [()] * (string_total == 0):
                        lhs, rhs, expected = check_string(g, k, tuple(b), method)
                        result.add(f"string {label} b={tuple(b)}", lhs - rhs, expected)
                dilaton_total = 4 * g - 3 + n - 2 * k
                if n and dilaton_total >= 0:
                    for b in padded_partitions(dilaton_total, n):
                        lhs, rhs, expected = check_dilaton(g, k, tuple(b), method)
                        result.add(f"dilaton {label} b={tuple(b)}", lhs - rhs, expected)
    return result


def join_cut_suite(d_max: int = 5, r_max: int = 6) -> SuiteResult:
    result = SuiteResult("join-cut")
    report = verify_join_cut(d_max, r_max)
    result.require(report.summary(), report.passed, report.mismatches[:5] + report.initial_failures)
    return result


def round_trip_suite(d_max: int = 5, r_max: int = 6) -> SuiteResult:
    result = SuiteResult("round-trip")
    table = build_series_table(d_max, r_max)
    back = table.log().exp()
    result.add(f"exp(log(table)) at ({d_max}, {r_max})", back.raw(), table.raw())
    result.require("log is not the identity", table.log().raw() != table.raw())
    return result


def ansatz_suite(order: int = 6, x_form_order: int = 5, x_form_g_max: int = 2, *, as_printed: bool = False) -> SuiteResult:
    """Series identities around ``w = x exp(u Q(w))``."""
    result = SuiteResult("ansatz" + (" (as printed)" if as_printed else ""))
    reports = [
        verify_ansatz(0, order),
        verify_ansatz(1, order, printed=as_printed),
        *(verify_wittansx(g, x_form_order) for g in range(x_form_g_max + 1)),
        verify_lagrange_forms(order),
        verify_w_identities(order),
        verify_genus0_u(order),
    ]
    if not as_printed:
        reports += [verify_w_expansion(g, order) for g in range(x_form_g_max + 1)]
    for report in reports:
        result.require(report.summary(), report.passed, [m[0] for m in report.mismatches])
    return result


def polynomiality_suite(chamber_d_max: int = 8, g_max: int = 3, n_max: int = 4, rays=BATTERY) -> SuiteResult:
    result = SuiteResult("polynomiality")
    for g, alpha, beta in rays:
        report = check_degree_bounds(g, alpha, beta)
        result.require(report.summary(), report.passed, report.row())
    chamber = check_chamber_formula_022(chamber_d_max)
    result.require(chamber.summary(), chamber.passed, chamber.canonical_mismatches[:5])
    for g in range(g_max + 1):
        for n in range(1, n_max + 1):
            if (g, n) in EXCLUDED:
                continue
            window = check_one_part_window(g, n)
            result.require(window.summary(), window.passed, window.sample_mismatches[:5])
    return result


def series_suite(max_index: int = 12) -> SuiteResult:
    result = SuiteResult("series")
    for n in range(2 * max_index + 1):
        result.add(f"Bernoulli B_{n}", bernoulli(n), bernoulli_from_series(n))
    for j in range(max_index + 1):
        result.add(f"xi_{2 * j}", xi(2 * j), xi_from_series(2 * j))
        result.add(f"v_{2 * j}", v_coeff(2 * j), v_from_series(2 * j))
        result.add(f"f_{2 * j}", f_coeff(2 * j), f_from_series(2 * j))
        result.require(f"sign of f_{2 * j}", (f_coeff(2 * j) > 0) == (j % 2 == 0), f_coeff(2 * j))
    return result


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "cross-methods": cross_methods,
    "one-part": one_part_suite,
    "worked-examples": worked_examples,
    "diagonal": diagonal_suite,
    "symbols": symbols_suite,
    "string-dilaton": string_dilaton_suite,
    "join-cut": join_cut_suite,
    "round-trip": round_trip_suite,
    "ansatz": ansatz_suite,
    "polynomiality": polynomiality_suite,
    "series": series_suite,
}


def run_suite(name: str, d_max: int | None = None, g_max: int | None = None, *, as_printed: bool = False) -> SuiteResult:
    """Run a suite by name with optional bound overrides; ``all`` runs every suite."""
    if name == "all":
        combined = SuiteResult("all")
        for key in SUITES:
            combined.merge(run_suite(key, d_max, g_max, as_printed=as_printed))
        return combined
    if name not in SUITES:
        raise KeyError(name)
    kwargs: dict = {}
    if name in ("cross-methods", "join-cut", "round-trip"):
        if d_max is not None:
            kwargs["d_max"] = d_max
    elif name in ("one-part", "diagonal"):
        if d_max is not None:
            kwargs["d_max"] = d_max
        if g_max is not None:
            kwargs["g_max"] = g_max
            if name == "one-part":
                kwargs["closed_g_max"] = min(g_max, CLOSED_GENUS_MAX)
    elif name == "worked-examples":
        if d_max is not None:
            kwargs["d_max"] = d_max
        if g_max is not None:
            kwargs["g_max"] = g_max
    elif name in ("symbols", "string-dilaton"):
        if g_max is not None:
            kwargs["g_max"] = g_max
            if name == "symbols":
                kwargs["family_g_max"] = g_max
    elif name == "ansatz":
        if d_max is not None:
            kwargs["order"] = max(d_max, 4)
            kwargs["x_form_order"] = max(d_max, 4)
        if g_max is not None:
            kwargs["x_form_g_max"] = g_max
    elif name == "polynomiality":
        if d_max is not None:
            kwargs["chamber_d_max"] = d_max
        if g_max is not None:
            kwargs["g_max"] = g_max
    if name in ("worked-examples", "symbols", "ansatz"):
        kwargs["as_printed"] = as_printed
    return SUITES[name](**kwargs)
