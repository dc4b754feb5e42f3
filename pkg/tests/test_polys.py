from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dhurwitz.polys import MPoly

NVARS = 3
rationals = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4))
monomials = st.tuples(*[st.integers(0, 2)] * NVARS)
polys = st.dictionaries(monomials, rationals, max_size=4).map(lambda t: MPoly(NVARS, t))
points = st.tuples(*[rationals] * NVARS)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == MPoly(NVARS)


@given(polys, polys, points)
def test_evaluation_is_a_homomorphism(a, b, point):
    assert (a * b).evaluate(point) == a.evaluate(point) * b.evaluate(point)
    assert (a + b).evaluate(point) == a.evaluate(point) + b.evaluate(point)


@given(polys, polys)
def test_derivative_is_leibniz(a, b):
    for i in range(NVARS):
        assert (a * b).derivative(i) == a.derivative(i) * b + a * b.derivative(i)


@given(polys, rationals, points)
def test_substitution_matches_evaluation(a, value, point):
    replaced = list(point)
    replaced[1] = value
    assert a.substitute(1, value).evaluate(point) == a.evaluate(replaced)


def test_powers_and_constants():
    x = MPoly.variable(2, 0)
    y = MPoly.variable(2, 1)
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x + 1) ** 0 == 1
    assert MPoly.linear_sum(2) == x + y
    assert ((x + y) / 2).coefficient((1, 0)) == Fraction(1, 2)
    assert (x**3).total_degrees() == {3}
    with pytest.raises(ValueError):
        x ** -1


def test_zero_terms_are_dropped():
    assert not MPoly(2, {(1, 0): 0})
    assert repr(MPoly(2)) == "0"
