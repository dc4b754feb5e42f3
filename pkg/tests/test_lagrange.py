from fractions import Fraction
from math import factorial

import pytest
import sympy

from dhurwitz.errors import PreconditionError
from dhurwitz.hurwitz import one_part
from dhurwitz.lagrange import (
    XSeries,
    compose,
    hurwitz_side,
    lagrange_coefficient,
    q_series,
    solve_w,
    solve_w_lagrange,
    verify_ansatz,
    verify_genus0_u,
    verify_lagrange_forms,
    verify_w_expansion,
    verify_w_identities,
    verify_wittansx,
)
from dhurwitz.polys import MPoly

ORDER = 6


@pytest.fixture(scope="module")
def w():
    return solve_w(ORDER)


def _only_q1(series, order):
    """Set ``u = q_1 = 1`` and every other ``q_j`` to zero."""
    point = [1, 1] + [0] * (order - 1)
    return [c.evaluate(point) for c in series.coeffs]


def test_tree_function_oracle(w):
    coeffs = _only_q1(w, ORDER)
    assert coeffs == [0] + [Fraction(n ** (n - 1), factorial(n)) for n in range(1, ORDER + 1)]


def test_two_q_oracle_against_sympy(w):
    # with Q(t) = t + t**2 the series solves w = x exp(w + w**2)
    x, t = sympy.symbols("x t")
    point = [1, 1, 1] + [0] * (ORDER - 2)
    ours = [c.evaluate(point) for c in w.coeffs]
    for n in range(1, ORDER + 1):
        phi_n = sympy.series(sympy.exp(n * (t + t**2)), t, 0, n).removeO()
        expected = Fraction(str(phi_n.coeff(t, n - 1) / n))
        assert ours[n] == expected


def test_fixed_point_and_lagrange_agree(w):
    assert solve_w_lagrange(ORDER) == w


def test_w_satisfies_its_equation(w):
    u = MPoly.variable(ORDER + 1, 0)
    assert (compose(q_series(ORDER), w) * u).exp().shift(1) == w


def test_identities():
    assert verify_w_identities(ORDER).passed


def test_lagrange_forms():
    report = verify_lagrange_forms(ORDER)
    assert report.passed, report.mismatches[:1]


def test_lagrange_form_arguments():
    f = XSeries.monomial(4, 5, 1)
    with pytest.raises(PreconditionError):
        lagrange_coefficient(f, 0, 1)
    with pytest.raises(PreconditionError):
        lagrange_coefficient(f, 2, 3)


def test_genus_zero_ansatz():
    assert verify_ansatz(0, ORDER).passed
    assert verify_genus0_u(ORDER).passed


def test_genus_one_ansatz():
    assert verify_ansatz(1, ORDER).passed


def test_quoted_genus_one_form_fails():
    report = verify_ansatz(1, ORDER, printed=True)
    assert not report.passed
    assert "printed form" in report.name


def test_ansatz_detects_wrong_values():
    def off_by_one(g, beta):
        value = one_part(g, beta)
        return value + 1 if beta == (2, 1) else value

    assert not verify_ansatz(0, ORDER, off_by_one).passed
    assert not verify_ansatz(1, ORDER, off_by_one).passed


@pytest.mark.parametrize("g", range(0, 4))
def test_general_w_expansion(g):
    assert verify_w_expansion(g, ORDER).passed


@pytest.mark.parametrize("g", range(0, 3))
def test_x_form_expansion(g):
    assert verify_wittansx(g, 5).passed


def test_hurwitz_side_low_terms():
    side = hurwitz_side(0, 4)
    nvars = 5
    # alpha = beta = (1) at r = 0 gives q_1 x
    assert side[1] == MPoly.variable(nvars, 1)


def test_ansatz_rejects_other_genera():
    with pytest.raises(PreconditionError):
        verify_ansatz(2, ORDER)
    with pytest.raises(PreconditionError):
        verify_ansatz(0, 3)


def test_series_operations():
    nvars = 2
    s = XSeries(4, nvars, [MPoly.constant(nvars, 1), MPoly.variable(nvars, 1)])
    assert s * s.reciprocal() == XSeries.constant(4, nvars, 1)
    with pytest.raises(PreconditionError):
        s.exp()
    with pytest.raises(PreconditionError):
        s.shift(-1)
    assert s.shift(2).shift(-2).truncate(2) == s.truncate(2)
