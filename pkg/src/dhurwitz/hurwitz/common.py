from __future__ import annotations

from typing import Iterable

from ..errors import PreconditionError
from ..partitions import Partition

__all__ = ["check_pair", "r_value", "genus_from_r"]


def check_pair(alpha: Iterable[int], beta: Iterable[int]) -> tuple[Partition, Partition]:
    alpha, beta = Partition(alpha), Partition(beta)
    if not alpha or not beta:
        raise PreconditionError("alpha and beta must be non-empty")
    if alpha.size != beta.size:
        raise PreconditionError(f"|alpha| = {alpha.size} differs from |beta| = {beta.size}")
    return alpha, beta


def r_value(g: int, alpha: Iterable[int], beta: Iterable[int]) -> int:
    """Number of simple branch points forced by Riemann-Hurwitz."""
    if g < 0:
        raise PreconditionError("genus must be non-negative")
    alpha, beta = check_pair(alpha, beta)
    return 2 * g - 2 + len(alpha) + len(beta)


def genus_from_r(r: int, alpha: Iterable[int], beta: Iterable[int]) -> int | None:
    """Inverse of :func:`r_value`; ``None`` when the parity is wrong.

    The result may be negative for disconnected covers.
    """
    twice = r + 2 - len(tuple(alpha)) - len(tuple(beta))
    return twice // 2 if twice % 2 == 0 else None
