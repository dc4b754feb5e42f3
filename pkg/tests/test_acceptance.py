"""One test per acceptance criterion, all at exact equality.

Criteria 3, 5 and 8 include identities that do not hold in the form in
which they are usually quoted.  Those tests check the quoted form, report
FAIL and are marked as expected failures; companion tests (ids ending in
``-corrected``) check the corrected forms.
"""

import time
from fractions import Fraction

import pytest

from dhurwitz.hurwitz import build_series_table
from dhurwitz.suites import (
    ansatz_suite,
    cross_methods,
    diagonal_suite,
    join_cut_suite,
    one_part_suite,
    polynomiality_suite,
    series_suite,
    string_dilaton_suite,
    symbols_suite,
    worked_examples,
)


def _note(result, seconds=None) -> str:
    text = f"{len(result.checks) - len(result.failures)}/{len(result.checks)} checks"
    if result.failures:
        text += "; first failure: " + result.failures[0].describe().removeprefix("FAIL  ")
    if seconds is not None:
        text += f"; {seconds:.1f}s"
    return text


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    result = fn(*args, **kwargs)
    return result, time.perf_counter() - start


def test_criterion_01_character_equals_brute_force(record):
    result, seconds = _timed(cross_methods, d_max=5, r_max=6)
    ok = result.passed and seconds <= 300
    record("1", ok, "character method = brute force, d <= 5, r <= 6", _note(result, seconds))
    assert ok, result.report()


def test_criterion_02_one_part_consistency(record):
    result, seconds = _timed(one_part_suite, d_max=8, g_max=3, closed_g_max=5)
    ok = result.passed and seconds <= 120
    record("2", ok, "one-part forms = character method = closed forms, d <= 8", _note(result, seconds))
    assert ok, result.report()


@pytest.mark.xfail(strict=True, reason="two of the three exponential forms are wrong as usually quoted")
def test_criterion_03_worked_examples_as_printed(record):
    result = worked_examples(d_max=11, g_max=2, as_printed=True)
    record("3", result.passed, "worked examples and two-part formula, quoted forms", _note(result))
    assert result.passed, result.report()


def test_criterion_03_worked_examples_corrected(record):
    result = worked_examples(d_max=11, g_max=2)
    record("3-corrected", result.passed, "worked examples with corrected coefficients", _note(result))
    assert result.passed, result.report()


def test_criterion_04_diagonal(record):
    result = diagonal_suite(d_max=8, g_max=4)
    record("4", result.passed, "diagonal formula, d <= 8, g <= 4, and 1/d in genus 0", _note(result))
    assert result.passed, result.report()


@pytest.mark.xfail(strict=True, reason="the tau_2 families as usually quoted lack the |Aut b| factor")
def test_criterion_05_symbols_as_printed(record):
    result = symbols_suite(g_max=3, n_max=4, family_g_max=4, as_printed=True)
    record("5", result.passed, "symbol routes agree, special values, closed-form families as quoted", _note(result))
    assert result.passed, result.report()


def test_criterion_05_symbols_corrected(record):
    result = symbols_suite(g_max=3, n_max=4, family_g_max=4)
    record("5-corrected", result.passed, "symbol checks with |Aut b| in the tau_2 families", _note(result))
    assert result.passed, result.report()


def test_criterion_06_string_and_dilaton(record):
    result = string_dilaton_suite(g_max=3, n_max=3)
    exceptional = [c for c in result.checks if c.label.startswith("string g=1 k=1 n=0")]
    ok = result.passed and len(exceptional) == 1 and exceptional[0].right == Fraction(1, 24)
    record("6", ok, "string and dilaton equations, g <= 3, n <= 3, with the 1/24 case", _note(result))
    assert ok, result.report()


def test_criterion_07_join_cut(record):
    result = join_cut_suite(d_max=5, r_max=6)
    record("7", result.passed, "join-cut equation at (5, 6) with initial conditions", result.checks[0].label)
    assert result.passed, result.report()


@pytest.mark.xfail(strict=True, reason="the genus-1 expansion in w is misquoted")
def test_criterion_08_ansatz_as_printed(record):
    result = ansatz_suite(order=6, x_form_order=5, x_form_g_max=2, as_printed=True)
    record("8", result.passed, "w-expansions g <= 1, x-expansions g <= 2, Lagrange forms; quoted form", _note(result))
    assert result.passed, result.report()


def test_criterion_08_ansatz_corrected(record):
    result = ansatz_suite(order=6, x_form_order=5, x_form_g_max=2)
    record("8-corrected", result.passed, "same, with the genus-1 w-expansion derived from the general one", _note(result))
    assert result.passed, result.report()


def test_criterion_09_polynomiality(record):
    result = polynomiality_suite(chamber_d_max=8, g_max=3, n_max=4)
    record("9", result.passed, "ray degrees, 2max chamber formula d <= 8, one-part windows", _note(result))
    assert result.passed, result.report()


def test_criterion_10_special_series(record):
    result = series_suite(max_index=12)
    record("10", result.passed, "Bernoulli, xi, v, f against series expansions; sign of f", _note(result))
    assert result.passed, result.report()


def test_criterion_11_round_trip(record):
    table = build_series_table(5, 6)
    back = table.log().exp()
    ok = back.raw() == table.raw() and len(table.raw()) > 0
    record("11", ok, "exp(log(table)) = table at (5, 6)", f"{len(table.raw())} coefficients")
    assert ok
