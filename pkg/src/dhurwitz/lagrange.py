"""The series ``w = x exp(u Q(w))`` and checks of the one-part genus expansions.

``Q(t) = sum_j q_j t**j``, and ``Q^(i)(t) = sum_j j**i q_j t**j``.  Series in
``x`` are truncated at ``x**D`` and their coefficients are polynomials in
``u, q_1, ..., q_D`` (variable 0 is ``u``, variable ``j`` is ``q_j``).
Larger ``q`` indices cannot contribute below order ``D + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Sequence

from .errors import PreconditionError
from .hurwitz import one_part, r_value
from .partitions import aut_order, padded_partitions, partitions_of
from .polys import MPoly
from .series import f_coeff, v_coeff

__all__ = [
    "XSeries",
    "q_series",
    "solve_w",
    "solve_w_lagrange",
    "compose",
    "lagrange_coefficient",
    "lagrange_direct",
    "mu_of_w",
    "AnsatzReport",
    "verify_ansatz",
    "verify_wittansx",
    "verify_w_expansion",
    "hurwitz_side",
    "verify_w_identities",
    "verify_lagrange_forms",
    "verify_genus0_u",
]


class XSeries:
    """Power series in ``x`` through ``x**order`` with polynomial coefficients."""

    __slots__ = ("order", "nvars", "coeffs")

    def __init__(self, order: int, nvars: int, coeffs: Sequence[MPoly] | None = None):
        self.order = order
        self.nvars = nvars
        coeffs = list(coeffs or [])
        coeffs += [MPoly(nvars)] * (order + 1 - len(coeffs))
        self.coeffs = coeffs[: order + 1]

    @classmethod
    def constant(cls, order: int, nvars: int, c) -> "XSeries":
        return cls(order, nvars, [MPoly.constant(nvars, c)])

    @classmethod
    def monomial(cls, order: int, nvars: int, power: int, c=1) -> "XSeries":
        coeffs = [MPoly(nvars)] * (order + 1)
        if power <= order:
            coeffs[power] = c if isinstance(c, MPoly) else MPoly.constant(nvars, c)
        return cls(order, nvars, coeffs)

    def __getitem__(self, n: int) -> MPoly:
        return self.coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, XSeries) and self.coeffs == other.coeffs

    def __add__(self, other):
        if not isinstance(other, XSeries):
            other = XSeries.constant(self.order, self.nvars, other)
        return XSeries(self.order, self.nvars, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return XSeries(self.order, self.nvars, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, XSeries):
            return XSeries(self.order, self.nvars, [a * other for a in self.coeffs])
        out = [MPoly(self.nvars) for _ in range(self.order + 1)]
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return XSeries(self.order, self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "XSeries":
        result = XSeries.constant(self.order, self.nvars, 1)
        for _ in range(n):
            result = result * self
        return result

    def shift(self, k: int = 1) -> "XSeries":
        """Multiply by ``x**k``; negative ``k`` divides and requires vanishing low terms."""
        if k < 0 and any(self.coeffs[:(-k)]):
            raise PreconditionError("series is not divisible by that power of x")
        zero = [MPoly(self.nvars)]
        coeffs = zero * k + self.coeffs if k >= 0 else self.coeffs[-k:]
        return XSeries(self.order, self.nvars, coeffs)

    def exp(self) -> "XSeries":
        if self.coeffs[0]:
            raise PreconditionError("exp needs a zero constant term")
        out = [MPoly.constant(self.nvars, 1)]
        for n in range(1, self.order + 1):
            acc = MPoly(self.nvars)
            for k in range(1, n + 1):
                if self.coeffs[k] and out[n - k]:
                    acc = acc + self.coeffs[k] * out[n - k] * k
            out.append(acc * Fraction(1, n))
        return XSeries(self.order, self.nvars, out)

    def reciprocal(self) -> "XSeries":
        """Inverse of a series whose constant term is a non-zero rational."""
        c0 = self.coeffs[0]
        if set(c0.terms) - {(0,) * self.nvars} or not c0:
            raise PreconditionError("constant term must be a non-zero number")
        inv0 = 1 / c0.coefficient((0,) * self.nvars)
        out = [MPoly.constant(self.nvars, inv0)]
        for n in range(1, self.order + 1):
            acc = MPoly(self.nvars)
            for i in range(1, n + 1):
                if self.coeffs[i] and out[n - i]:
                    acc = acc + self.coeffs[i] * out[n - i]
            out.append(acc * (-inv0))
        return XSeries(self.order, self.nvars, out)

    def x_ddx(self, power: int = 1) -> "XSeries":
        """Apply ``(x d/dx)**power``; negative powers need a zero constant term."""
        if power < 0 and self.coeffs[0]:
            raise PreconditionError("cannot invert x d/dx on a non-zero constant")
        return XSeries(
            self.order,
            self.nvars,
            [
                c * Fraction(n) ** power if n else (c if power == 0 else MPoly(self.nvars))
                for n, c in enumerate(self.coeffs)
            ],
        )

    def derivative_u(self) -> "XSeries":
        return XSeries(self.order, self.nvars, [c.derivative(0) for c in self.coeffs])

    def at_u(self, value) -> "XSeries":
        return XSeries(self.order, self.nvars, [c.substitute(0, value) for c in self.coeffs])

    def truncate(self, order: int) -> "XSeries":
        return XSeries(order, self.nvars, self.coeffs[: order + 1])


def q_series(order: int, power: int = 0) -> XSeries:
    """``Q^(power)(x) = sum_j j**power q_j x**j``."""
    nvars = order + 1
    coeffs = [MPoly(nvars)] + [MPoly.variable(nvars, j) * Fraction(j) ** power for j in range(1, order + 1)]
    return XSeries(order, nvars, coeffs)


def compose(f: XSeries, w: XSeries) -> XSeries:
    """``f(w)`` for a series ``w`` without constant term."""
    if w.coeffs[0]:
        raise PreconditionError("inner series must have zero constant term")
    result = XSeries(w.order, w.nvars)
    power = XSeries.constant(w.order, w.nvars, 1)
    for k, c in enumerate(f.coeffs):
        if k > w.order:
            break
        if c:
            result = result + power * c
        power = power * w
    return result


def solve_w(order: int) -> XSeries:
    """Solve ``w = x exp(u Q(w))`` by fixed-point iteration."""
    if order < 1:
        raise PreconditionError("order must be at least 1")
    nvars = order + 1
    u = MPoly.variable(nvars, 0)
    q = q_series(order)
    w = XSeries.monomial(order, nvars, 1)
    for _ in range(order):
        w = (compose(q, w) * u).exp().shift(1)
    return w


def _phi_power(order: int, n: int) -> XSeries:
    """``exp(n u Q(lambda))`` as a series in ``lambda``."""
    nvars = order + 1
    return (q_series(order) * (MPoly.variable(nvars, 0) * n)).exp()


def lagrange_coefficient(f: XSeries, n: int, form: int = 1) -> MPoly:
    """``[x**n]`` of ``f(w)`` (form 1) or of ``f(w)/w * x dw/dx`` (form 2).

    ``f`` is a series in the auxiliary variable ``lambda``; both forms
    extract coefficients of ``f`` against powers of ``exp(u Q(lambda))``.
    """
    order = f.order
    if form == 1:
        if n < 1:
            raise PreconditionError("form 1 needs n >= 1")
        derivative = XSeries(order, f.nvars, [c * k for k, c in enumerate(f.coeffs)][1:])
        return (derivative * _phi_power(order, n))[n - 1] * Fraction(1, n)
    if form == 2:
        if n < 0:
            raise PreconditionError("form 2 needs n >= 0")
        return (f * _phi_power(order, n))[n]
    raise PreconditionError("form must be 1 or 2")


def lagrange_direct(f: XSeries, w: XSeries, form: int = 1) -> XSeries:
    """The same quantities by substituting ``w`` directly.

    Form 2 divides ``w`` by ``x``, which loses its top coefficient, so that
    result is truncated one order lower.
    """
    fw = compose(f, w)
    if form == 1:
        return fw
    # (x dw/dx) / w, both sides divided by x first
    ratio = w.x_ddx().shift(-1) * w.shift(-1).reciprocal()
    return (fw * ratio).truncate(w.order - 1)


def solve_w_lagrange(order: int) -> XSeries:
    """``w`` from its Lagrange coefficients ``(1/n) [lambda**(n-1)] exp(n u Q)``."""
    nvars = order + 1
    ident = XSeries.monomial(order, nvars, 1)
    coeffs = [MPoly(nvars)] + [lagrange_coefficient(ident, n, 1) for n in range(1, order + 1)]
    return XSeries(order, nvars, coeffs)


def mu_of_w(w: XSeries, u_value=None) -> XSeries:
    """``1 / (1 - u Q^(1)(w))``; pass ``u_value`` to substitute ``u``."""
    q1 = compose(q_series(w.order, 1), w)
    u = MPoly.variable(w.nvars, 0) if u_value is None else Fraction(u_value)
    return (1 - q1 * u).reciprocal()


def verify_lagrange_forms(order: int, functions: Sequence[XSeries] | None = None) -> "AnsatzReport":
    """Both coefficient formulas against direct substitution of ``w``.

    The default test functions are ``lambda``, ``lambda**2``, ``Q(lambda)``,
    ``Q^(1)(lambda)`` and ``exp(lambda)``.
    """
    if order < 1:
        raise PreconditionError("order must be at least 1")
    nvars = order + 1
    if functions is None:
        exp_lambda = XSeries(
            order, nvars, [MPoly.constant(nvars, Fraction(1, factorial(k))) for k in range(order + 1)]
        )
        functions = [
            XSeries.monomial(order, nvars, 1),
            XSeries.monomial(order, nvars, 2),
            q_series(order),
            q_series(order, 1),
            exp_lambda,
        ]
    w = solve_w(order)
    report = AnsatzReport("Lagrange forms", order)
    for index, f in enumerate(functions):
        for form in (1, 2):
            direct = lagrange_direct(f, w, form)
            for n in range(1 if form == 1 else 0, direct.order + 1):
                got = lagrange_coefficient(f, n, form)
                if got != direct[n]:
                    report.mismatches.append((index, form, n, got, direct[n]))
    return report


# ansatz checks -----------------------------------------------------------------


HValues = Callable[[int, tuple], Fraction]


def _one_part_values(g: int, beta: tuple) -> Fraction:
    return one_part(g, beta)


def hurwitz_side(g: int, order: int, values: HValues | None = None, with_u: bool = False) -> XSeries:
    """``sum_d x**d sum_beta H q_beta u**l(beta) / (r! |Aut beta|)`` for ``alpha = (d)``."""
    values = values or _one_part_values
    nvars = order + 1
    coeffs = [MPoly(nvars)]
    for d in range(1, order + 1):
        terms = {}
        for beta in partitions_of(d):
            r = r_value(g, (d,), beta)
            if r < 0:
                continue
            exps = [0] * nvars
            for part in beta:
                exps[part] += 1
            if with_u:
                exps[0] = len(beta)
            terms[tuple(exps)] = values(g, tuple(beta)) / (factorial(r) * aut_order(beta))
        coeffs.append(MPoly(nvars, terms))
    return XSeries(order, nvars, coeffs)


@dataclass
class AnsatzReport:
    name: str
    order: int
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> str:
        state = "ok" if self.passed else "FAILED"
        return f"{self.name} through x^{self.order}: {len(self.mismatches)} mismatched orders ({state})"


def _compare(name: str, left: XSeries, right: XSeries, start: int = 1) -> AnsatzReport:
    report = AnsatzReport(name, left.order)
    for d in range(start, left.order + 1):
        if left[d] != right[d]:
            report.mismatches.append((d, left[d], right[d]))
    return report


def verify_ansatz(
    g: int, order: int, values: HValues | None = None, *, printed: bool = False
) -> AnsatzReport:
    """Genus 0 and 1 expansions in terms of ``w`` at ``u = 1``.

    In genus 1 the default right side is
    ``(Q3 mu**2 + Q2**2 mu**3 - mu + 1) / 24``, the specialization of
    :func:`verify_w_expansion`.  ``printed=True`` uses instead
    ``(Q3 mu + Q2**2 mu**2 - mu + 1) / 24``, the form in which this identity
    is commonly quoted; that form does not hold.
    """
    if order < 4:
        raise PreconditionError("order must be at least 4")
    w = solve_w(order).at_u(1)
    if g == 0:
        left = hurwitz_side(0, order, values).x_ddx()
        right = compose(q_series(order), w)
        return _compare("ansatz g=0", left, right)
    if g == 1:
        left = hurwitz_side(1, order, values)
        mu = mu_of_w(w, 1)
        q2 = compose(q_series(order, 2), w)
        q3 = compose(q_series(order, 3), w)
        if printed:
            right = q3 * mu + q2 * q2 * mu * mu - mu + 1
        else:
            right = q3 * mu * mu + q2 * q2 * mu * mu * mu - mu + 1
        name = "ansatz g=1" + (" (printed form)" if printed else "")
        return _compare(name, left, right * Fraction(1, 24), start=0)
    raise PreconditionError("the closed w-form expansion is checked for g in {0, 1}")


def verify_w_expansion(g: int, order: int, values: HValues | None = None) -> AnsatzReport:
    """General genus expansion in ``w`` at ``u = 1``.

    Right side: ``sum_k f_2k sum_{theta |- g-k} v_2theta / |Aut theta|``
    times ``(x d/dx)**(2g-2+l(theta))`` applied to
    ``Q^(2 theta)(w) mu(w)``, minus 1 when ``theta`` is empty.  Negative
    powers of ``x d/dx`` act on series without constant term.
    """
    if order < 1 or g < 0:
        raise PreconditionError("need order >= 1 and g >= 0")
    w = solve_w(order).at_u(1)
    mu = mu_of_w(w, 1)
    nvars = order + 1
    composed = {}
    right = XSeries(order, nvars)
    for k in range(g + 1):
        for theta in partitions_of(g - k):
            weight = f_coeff(2 * k) * Fraction(1, aut_order(theta))
            body = mu
            for t in theta:
                weight *= v_coeff(2 * t)
                if t not in composed:
                    composed[t] = compose(q_series(order, 2 * t), w)
                body = body * composed[t]
            if not theta:
                body = body - 1
            right = right + body.x_ddx(2 * g - 2 + len(theta)) * weight
    left = hurwitz_side(g, order, values)
    return _compare(f"w-form expansion g={g}", left, right, start=0)


def verify_wittansx(g: int, order: int, values: HValues | None = None) -> AnsatzReport:
    """Expansion in ``Q^(2 theta)(x)`` summed over partitions with zero parts."""
    if order < 4:
        raise PreconditionError("order must be at least 4")
    if g < 0:
        raise PreconditionError("genus must be non-negative")
    nvars = order + 1
    left = hurwitz_side(g, order, values)
    right = XSeries(order, nvars)
    powers = {}
    for k in range(g + 1):
        for length in range(1, order + 1):
            for theta in padded_partitions(g - k, length):
                weight = f_coeff(2 * k) * Fraction(1, aut_order(theta))
                prod = XSeries.constant(order, nvars, 1)
                for t in theta:
                    weight *= v_coeff(2 * t)
                    if t not in powers:
                        powers[t] = q_series(order, 2 * t)
                    prod = prod * powers[t]
                right = right + prod.x_ddx(2 * g - 2 + length) * weight
    return _compare(f"x-form expansion g={g}", left, right, start=0)


def verify_w_identities(order: int) -> AnsatzReport:
    """``x dw/dx = w mu(w)`` and ``dw/du = w Q(w) mu(w)``."""
    w = solve_w(order)
    mu = mu_of_w(w)
    report = _compare("x dw/dx = w mu(w)", w.x_ddx(), w * mu)
    second = _compare("dw/du = w Q(w) mu(w)", w.derivative_u(), w * compose(q_series(order), w) * mu)
    report.mismatches += second.mismatches
    report.name = "w identities"
    return report


def verify_genus0_u(order: int, values: HValues | None = None) -> AnsatzReport:
    """Genus-zero expansion ``x d/dx H = u Q(w)`` with ``u`` kept symbolic."""
    w = solve_w(order)
    left = hurwitz_side(0, order, values, with_u=True).x_ddx()
    right = compose(q_series(order), w) * MPoly.variable(order + 1, 0)
    return _compare("genus 0 with u", left, right)
