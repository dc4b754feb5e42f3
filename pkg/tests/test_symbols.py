from fractions import Fraction
from math import factorial

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from dhurwitz.errors import PreconditionError
from dhurwitz.partitions import aut_order, padded_partitions
from dhurwitz.series import bernoulli
from dhurwitz.symbols import (
    FAMILIES,
    PicIndex,
    QPolynomial,
    check_dilaton,
    check_string,
    closed_form_exponents,
    closed_form_symbol,
    family_range,
    one_part_polynomial,
    one_point_generating_coefficient,
    symbol,
    symbol_def,
    symbol_wittcor,
)


def _balanced(g_max, n_max):
    out = []
    for g in range(g_max + 1):
        for n in range(1, n_max + 1):
            if (g, n) in {(0, 1), (0, 2)}:
                continue
            for k in range(g + 1):
                total = 4 * g - 3 + n - 2 * k
                if total >= 0:
                    out += [(g, k, tuple(b)) for b in padded_partitions(total, n)]
    return out


def test_special_values():
    assert symbol_wittcor(1, 0, (2,)) == Fraction(1, 24)
    assert symbol_def(1, 0, (2,)) == Fraction(1, 24)
    assert symbol_wittcor(1, 1, (0,)) == Fraction(1, 24)
    assert symbol_wittcor(0, 0, (0, 0, 0)) == 1


@pytest.mark.parametrize("g,k,b", _balanced(3, 4))
def test_two_routes_agree_and_are_non_negative(g, k, b):
    value = symbol_wittcor(g, k, b)
    assert symbol_def(g, k, b) == value
    assert value >= 0


def test_unbalanced_symbols_vanish():
    assert symbol_wittcor(1, 0, (1,)) == 0
    assert symbol_def(2, 1, (3, 3)) == 0


def test_symbol_is_symmetric():
    assert symbol(2, 0, (3, 2, 1)) == symbol(2, 0, (1, 3, 2))


def test_index_validation():
    with pytest.raises(PreconditionError):
        PicIndex(0, 0, (1,))
    with pytest.raises(PreconditionError):
        PicIndex(1, 2, (0,))
    with pytest.raises(PreconditionError):
        PicIndex(1, 0, (-1,))
    with pytest.raises(PreconditionError):
        symbol(1, 0, (2,), method="nope")


@pytest.mark.parametrize("g", range(1, 5))
def test_top_psi_and_top_lambda_values(g):
    assert symbol_wittcor(g, 0, (4 * g - 2,)) == Fraction(1, 2 ** (2 * g) * factorial(2 * g + 1))
    half = 2 ** (2 * g - 1)
    expected = Fraction(half - 1, half * factorial(2 * g)) * abs(bernoulli(2 * g))
    assert symbol_wittcor(g, g, (2 * g - 2,)) == expected


@pytest.mark.parametrize("family", FAMILIES)
def test_families_match_explicit_sum(family):
    cases = family_range(family, 4)
    assert cases
    for g, k, b in cases:
        exps = closed_form_exponents(family, g, k, b)
        assert closed_form_symbol(family, g, k, b) == symbol_wittcor(g, k, exps)


@pytest.mark.parametrize("family", ["tau2", "tau2_tau3", "tau2_tau3sq"])
def test_quoted_tau2_families_differ_by_aut(family):
    for g, k, b in family_range(family, 4):
        exps = closed_form_exponents(family, g, k, b)
        quoted = closed_form_symbol(family, g, k, b, as_printed=True)
        assert quoted * aut_order(exps) == symbol_wittcor(g, k, exps)


def test_family_ranges_rejected():
    with pytest.raises(PreconditionError):
        closed_form_symbol("tau2", 1, 1)
    with pytest.raises(PreconditionError):
        closed_form_symbol("two_point", 2, 0, (1, 1))
    with pytest.raises(PreconditionError):
        closed_form_symbol("unknown", 1)


def test_one_point_generating_function_against_sympy():
    t, x = sympy.symbols("t x")
    expr = x * sympy.sinh(t / 2) / sympy.sin(x * t / 2)
    expansion = sympy.series(expr, t, 0, 10).removeO()
    for g in range(1, 5):
        coeff_t = sympy.expand(expansion.coeff(t, 2 * g))
        for k in range(g + 1):
            expected = Fraction(str(coeff_t.coeff(x, 2 * k)))
            assert one_point_generating_coefficient(g, k) == expected
            assert closed_form_symbol("one_point", g, k) == expected


@pytest.mark.parametrize("g", range(0, 4))
def test_string_equation(g):
    for k in range(g + 1):
        for n in range(0, 4):
            if g == 0 and n < 3:
                continue
            total = 4 * g - 2 + n - 2 * k
            if total < 0:
                continue
            for b in padded_partitions(total, n) if n else ([()] if total == 0 else []):
                lhs, rhs, expected = check_string(g, k, tuple(b))
                assert lhs - rhs == expected


def test_string_exceptional_case():
    assert check_string(1, 1, ()) == (Fraction(1, 24), 0, Fraction(1, 24))


def test_string_needs_three_points_in_genus_zero():
    with pytest.raises(PreconditionError):
        check_string(0, 0, (0, 0))


@pytest.mark.parametrize("g", range(0, 4))
def test_dilaton_equation(g):
    for k in range(g + 1):
        for n in range(1, 4):
            total = 4 * g - 3 + n - 2 * k
            if total < 0:
                continue
            for b in padded_partitions(total, n):
                lhs, rhs, _ = check_dilaton(g, k, tuple(b))
                assert lhs == rhs


def test_one_part_polynomial_excluded_cases():
    with pytest.raises(PreconditionError):
        one_part_polynomial(0, 2)


def test_q_polynomial_derivation_is_leibniz():
    raised = QPolynomial.product((2, 1)).delta()
    assert raised.terms == {(3, 1): 1, (2, 2): 1}
    squared = QPolynomial.product((1, 1)).delta()
    assert squared.coefficient((2, 1)) == 2


def test_bounded_derivation_drops_unreachable_terms():
    raised = QPolynomial.product((2, 1)).delta(bound=(2, 2))
    assert raised.terms == {(2, 2): 1}


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_routes_agree_on_random_indices(g, n, data):
    k = data.draw(st.integers(0, g))
    total = 4 * g - 3 + n - 2 * k
    b = data.draw(st.sampled_from(padded_partitions(total, n)))
    assert symbol_def(g, k, b) == symbol_wittcor(g, k, b)
