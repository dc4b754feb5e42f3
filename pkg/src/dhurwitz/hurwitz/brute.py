"""Direct count of factorizations in the symmetric group.

A tuple ``(sigma, tau_1, ..., tau_r)`` is counted when ``sigma`` has cycle
type ``beta``, every ``tau_i`` is a transposition and ``tau_r ... tau_1 sigma``
has cycle type ``alpha``.  For connected counts the generated subgroup must
also act transitively.

``sigma`` is fixed to one representative of its class and the count is
multiplied by the class size.  Sequences of transpositions are enumerated
step by step, merging partial products that agree in both the permutation
reached so far and the orbit partition generated so far.  Merged states are
followed by multiplicity, so every tuple is still counted exactly once.
"""

from __future__ import annotations

import threading
from collections import Counter, defaultdict
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable

from ..errors import PreconditionError, ResourceLimitError
from ..partitions import Partition, aut_order, class_size
from .common import check_pair, r_value

__all__ = [
    "brute_force",
    "brute_force_disconnected_r",
    "factorization_counts",
    "cycle_type",
    "DEFAULT_MAX_DEGREE",
    "DEFAULT_WORK_LIMIT",
]

DEFAULT_MAX_DEGREE = 6
DEFAULT_WORK_LIMIT = 10**8


def cycle_type(perm: tuple) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        n, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = perm[x]
            n += 1
        lengths.append(n)
    return Partition(lengths)


def _representative(beta: Partition) -> tuple:
    perm, start = [], 0
    for part in beta:
        perm.extend(start + (i + 1) % part for i in range(part))
        start += part
    return tuple(perm)


def _orbit_labels(perm: tuple) -> tuple:
    labels = [-1] * len(perm)
    nxt = 0
    for start in range(len(perm)):
        if labels[start] >= 0:
            continue
        x = start
        while labels[x] < 0:
            labels[x] = nxt
            x = perm[x]
        nxt += 1
    return tuple(labels)


def _merge(labels: tuple, a: int, b: int) -> tuple:
    la, lb = labels[a], labels[b]
    if la == lb:
        return labels
    merged = [la if x == lb else x for x in labels]
    # relabel by first occurrence so equal partitions share one key
    remap, out = {}, []
    for x in merged:
        out.append(remap.setdefault(x, len(remap)))
    return tuple(out)


class _Progression:
    """Enumeration state for one ``beta``, advanced one transposition at a time."""

    def __init__(self, beta: Partition):
        d = beta.size
        self.transpositions = list(combinations(range(d), 2))
        sigma = _representative(beta)
        self.states = {(sigma, _orbit_labels(sigma)): 1}
        self.tallies = [self._tally()]
        self.lock = threading.Lock()

    def _tally(self):
        every, transitive = Counter(), Counter()
        for (perm, labels), count in self.states.items():
            kind = cycle_type(perm)
            every[kind] += count
            if max(labels) == 0:
                transitive[kind] += count
        return every, transitive

    def advance(self) -> None:
        nxt: dict = defaultdict(int)
        for (perm, labels), count in self.states.items():
            for a, b in self.transpositions:
                # left multiplication by (a b) swaps the values a and b
                new = tuple(b if x == a else a if x == b else x for x in perm)
                nxt[(new, _merge(labels, a, b))] += count
        self.states = nxt
        self.tallies.append(self._tally())


_progressions: dict[Partition, _Progression] = {}
_registry_lock = threading.Lock()


def factorization_counts(beta: Partition, r: int, work_limit: int = DEFAULT_WORK_LIMIT) -> tuple:
    """Counts for the fixed representative of ``beta`` after ``r`` transpositions.

    Returns ``(all_counts, transitive_counts)``, two Counters keyed by the
    cycle type of the final product.  Work is measured as the number of
    state-transposition pairs processed; the limit applies to the steps
    still to be taken.
    """
    beta = Partition(beta)
    with _registry_lock:
        prog = _progressions.get(beta)
        if prog is None:
            prog = _progressions[beta] = _Progression(beta)
    with prog.lock:
        work = 0
        for _ in range(len(prog.tallies) - 1, r):
            work += len(prog.states) * len(prog.transpositions)
            if work > work_limit:
                raise ResourceLimitError(
                    f"brute force for beta={beta}, r={r} exceeds work limit {work_limit}"
                )
            prog.advance()
        return prog.tallies[r]


def brute_force(
    g: int,
    alpha: Iterable[int],
    beta: Iterable[int],
    connected: bool = True,
    *,
    divide_by_automorphisms: bool = False,
    max_degree: int = DEFAULT_MAX_DEGREE,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> Fraction:
    """Double Hurwitz number by exhaustive enumeration.

    The default normalization is ``|Aut alpha| |Aut beta| / d!`` times the
    number of factorizations.  With ``divide_by_automorphisms`` the factor
    ``|Aut alpha| |Aut beta|`` is dropped.
    """
    alpha, beta = check_pair(alpha, beta)
    d = alpha.size
    if d > max_degree:
        raise ResourceLimitError(f"degree {d} exceeds brute-force bound {max_degree}")
    r = r_value(g, alpha, beta)
    if r < 0:
        return Fraction(0)
    every, transitive = factorization_counts(beta, r, work_limit)
    tuples = class_size(beta) * (transitive if connected else every)[alpha]
    weight = Fraction(1, factorial(d))
    if not divide_by_automorphisms:
        weight *= aut_order(alpha) * aut_order(beta)
    return tuples * weight


def brute_force_disconnected_r(
    alpha: Iterable[int],
    beta: Iterable[int],
    r: int,
    *,
    max_degree: int = DEFAULT_MAX_DEGREE,
    work_limit: int = DEFAULT_WORK_LIMIT,
) -> Fraction:
    """Possibly disconnected count indexed directly by the number of transpositions."""
    alpha, beta = check_pair(alpha, beta)
    if alpha.size > max_degree:
        raise ResourceLimitError(f"degree {alpha.size} exceeds brute-force bound {max_degree}")
    if r < 0:
        raise PreconditionError("r must be non-negative")
    every, _ = factorization_counts(beta, r, work_limit)
    tuples = class_size(beta) * every[alpha]
    return Fraction(tuples * aut_order(alpha) * aut_order(beta), factorial(alpha.size))
