"""Exponential-sum forms of a few double Hurwitz numbers.

For fixed ``alpha`` and ``beta`` the connected number is a finite sum
``scale * sum_e c_e * e**r`` with ``r`` the number of simple branch points.
Each entry holds the form as usually quoted and, where that disagrees with
direct computation, the corrected coefficients (found by matching the
character method for ``g <= 15`` and brute force at ``g = 0``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import PreconditionError
from ..partitions import Partition
from .common import r_value

__all__ = ["ExponentialForm", "EXPONENTIAL_FORMS", "exponential_form"]


@dataclass(frozen=True)
class ExponentialForm:
    alpha: Partition
    beta: Partition
    scale: Fraction
    terms: tuple  # (base, coefficient) pairs

    def value(self, g: int) -> Fraction:
        r = r_value(g, self.alpha, self.beta)
        return self.scale * sum(Fraction(c) * Fraction(e) ** r for e, c in self.terms)


def _form(alpha, beta, scale, terms) -> ExponentialForm:
    return ExponentialForm(Partition(alpha), Partition(beta), Fraction(scale), tuple(terms))


_H = Fraction(1, 2)

# (printed, corrected); corrected is None when the printed form is right.
EXPONENTIAL_FORMS = {
    (Partition((8, 3)), Partition((7, 4))): (
        _form((3, 8), (4, 7), Fraction(2, 3 * 8 * 4 * 7), [(55, 1), (44, 1), (33, 1), (23, -1), (12, -1), (1, -1)]),
        None,
    ),
    (Partition((6, 2, 1)), Partition((5, 3, 1))): (
        _form(
            (1, 2, 6),
            (1, 3, 5),
            Fraction(1, 180),
            [(2, 1), (6, -1), (10, 1), (12, 1), (18, -1), (20, -1), (28, -1), (36, 1)],
        ),
        _form(
            (1, 2, 6),
            (1, 3, 5),
            Fraction(1, 90),
            [(2, 1), (6, -1), (10, 1), (12, 1), (18, -1), (20, -1), (28, -1), (36, 1)],
        ),
    ),
    (Partition((4, 2, 2)), Partition((3, 2, 2, 1))): (
        _form(
            (2, 2, 4),
            (1, 2, 2, 3),
            Fraction(1, 48),
            [(2, 3), (4, 9 * _H), (6, 3), (10, -1), (14, -1), (16, -1), (28, _H)],
        ),
        _form(
            (2, 2, 4),
            (1, 2, 2, 3),
            Fraction(1, 48),
            [(2, 3), (4, 9 * _H), (6, 3), (10, -1), (14, -1), (16, -2), (28, _H)],
        ),
    ),
}


def exponential_form(alpha, beta, g: int, *, printed: bool = False) -> Fraction:
    """Value of a tabulated exponential-sum form at genus ``g``."""
    key = (Partition(alpha), Partition(beta))
    if key not in EXPONENTIAL_FORMS:
        raise PreconditionError(f"no exponential form tabulated for {key[0]} / {key[1]}")
    quoted, corrected = EXPONENTIAL_FORMS[key]
    form = quoted if printed or corrected is None else corrected
    return form.value(g)
