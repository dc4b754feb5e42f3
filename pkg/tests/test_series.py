from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from dhurwitz.errors import PreconditionError
from dhurwitz.series import (
    UnivariateSeries,
    bernoulli,
    bernoulli_from_series,
    f_coeff,
    sinhc_series,
    v_coeff,
    xi,
)

x = sympy.Symbol("x")
ORDER = 24


def _sympy_coeffs(expr, order=ORDER):
    poly = sympy.series(expr, x, 0, order + 1).removeO()
    return [Fraction(str(poly.coeff(x, k))) for k in range(order + 1)]


@pytest.fixture(scope="module")
def oracle():
    return {
        "xi": _sympy_coeffs(sympy.log(sympy.sinh(x) / x)),
        "v": _sympy_coeffs(2 / x * sympy.sinh(x / 2)),
        "f": _sympy_coeffs((x / 2) / sympy.sinh(x / 2)),
        "bernoulli": _sympy_coeffs(x / (sympy.exp(x) - 1)),
    }


@pytest.mark.parametrize("j", range(0, 13))
def test_closed_forms_match_sympy_series(oracle, j):
    assert xi(2 * j) == oracle["xi"][2 * j]
    assert v_coeff(2 * j) == oracle["v"][2 * j]
    assert f_coeff(2 * j) == oracle["f"][2 * j]


@pytest.mark.parametrize("n", range(0, 25))
def test_bernoulli_matches_sympy_series(oracle, n):
    expected = oracle["bernoulli"][n] * sympy.factorial(n)
    assert bernoulli(n) == Fraction(str(expected))
    assert bernoulli_from_series(n) == bernoulli(n)


def test_bernoulli_first_values():
    assert [bernoulli(n) for n in range(5)] == [1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)]


@pytest.mark.parametrize("j", range(0, 13))
def test_sign_of_f(j):
    assert (f_coeff(2 * j) > 0) == (j % 2 == 0)


def test_odd_index_rejected():
    with pytest.raises(PreconditionError):
        xi(3)
    with pytest.raises(PreconditionError):
        bernoulli(-1)


def test_sinhc_matches_sympy():
    ours = sinhc_series(Fraction(3, 2), 10)
    theirs = _sympy_coeffs(sympy.sinh(3 * x / 2) / (3 * x / 2), 10)
    assert list(ours) == theirs


rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))
series = st.lists(rationals, min_size=6, max_size=6)


@given(series, series)
def test_series_ring_laws(a, b):
    p, q = UnivariateSeries(a), UnivariateSeries(b)
    assert p * q == q * p
    assert (p + q) - q == p


@given(series)
def test_exp_log_inverse(a):
    a[0] = Fraction(0)
    p = UnivariateSeries(a)
    assert p.exp().log() == p


@given(series)
def test_reciprocal_and_negative_power(a):
    a[0] = Fraction(1)
    p = UnivariateSeries(a)
    one = UnivariateSeries.constant(1, 5)
    assert p * p.reciprocal() == one
    assert p**-2 * p**2 == one
