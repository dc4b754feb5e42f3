"""Irreducible characters of the symmetric group.

Values come from the Murnaghan-Nakayama rule, removing border strips of the
largest part of the cycle type first.  Border strips are handled on the
beta-set (abacus) of the shape: removing a strip of length ``k`` moves one bead
down by ``k`` positions, and the strip height is the number of beads jumped.
"""

from __future__ import annotations

import json
import os
import threading
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Iterable

from .errors import PreconditionError
from .partitions import Partition, class_size, conjugate, hook_content_counts
from .series import UnivariateSeries

__all__ = [
    "CharacterCache",
    "default_cache",
    "character",
    "eta",
    "eta_from_characters",
    "hook_character_polynomial",
    "CACHE_VERSION",
]

CACHE_VERSION = 1


def _strip_removals(lam: tuple, k: int):
    """Yield ``(shape, height)`` for each border strip of size ``k`` in ``lam``."""
    n = len(lam)
    beads = [lam[i] + (n - 1 - i) for i in range(n)]
    occupied = set(beads)
    for i, b in enumerate(beads):
        target = b - k
        if target < 0 or target in occupied:
            continue
        height = sum(1 for c in beads if target < c < b)
        moved = sorted((target if j == i else c for j, c in enumerate(beads)), reverse=True)
        shape = tuple(p for p in (moved[j] - (n - 1 - j) for j in range(n)) if p > 0)
        yield shape, height


class CharacterCache:
    """Thread-safe memo of character values keyed by ``(shape, cycle type)``.

    The table can be written to and read from one JSON file per degree.
    """

    def __init__(self):
        self._values: dict[tuple, int] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._values)

    def value(self, lam: tuple, mu: tuple) -> int:
        key = (lam, mu)
        hit = self._values.get(key)
        if hit is not None:
            return hit
        if not mu:
            result = 1 if not lam else 0
        else:
            k, rest = mu[0], mu[1:]
            result = 0
            for shape, height in _strip_removals(lam, k):
                term = self.value(shape, rest)
                result += -term if height % 2 else term
        with self._lock:
            self._values[key] = result
        return result

    def entries(self, d: int | None = None):
        for (lam, mu), chi in list(self._values.items()):
            if d is None or sum(lam) == d:
                yield lam, mu, chi

    def save(self, directory: str | os.PathLike, d: int) -> Path:
        path = Path(directory) / f"characters_d{d}.json"
        path.parent.mkdir(parents=True, exist_ok=True)
        payload = {
            "version": CACHE_VERSION,
            "d": d,
            "entries": [
                {"lambda": ",".join(map(str, lam)), "mu": ",".join(map(str, mu)), "chi": chi}
                for lam, mu, chi in sorted(self.entries(d))
            ],
        }
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(payload))
        tmp.replace(path)
        return path

    def load(self, directory: str | os.PathLike, d: int) -> int:
        """Merge a saved table; returns the number of entries read (0 if absent)."""
        path = Path(directory) / f"characters_d{d}.json"
        if not path.exists():
            return 0
        payload = json.loads(path.read_text())
        if payload.get("version") != CACHE_VERSION or payload.get("d") != d:
            raise PreconditionError(f"incompatible character cache file {path}")
        parse = lambda s: tuple(int(x) for x in s.split(",")) if s else ()
        with self._lock:
            for e in payload["entries"]:
                self._values[(parse(e["lambda"]), parse(e["mu"]))] = int(e["chi"])
        return len(payload["entries"])


default_cache = CharacterCache()


def character(lam: Iterable[int], mu: Iterable[int], cache: CharacterCache | None = None) -> int:
    """Value of the irreducible character indexed by ``lam`` on cycle type ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.size != mu.size:
        raise PreconditionError(f"|lambda| = {lam.size} differs from |mu| = {mu.size}")
    return (cache or default_cache).value(tuple(lam), tuple(mu))


def eta(lam: Iterable[int]) -> int:
    """Central character of the class of transpositions, times that class size."""
    lam = Partition(lam)
    return sum(comb(p, 2) for p in lam) - sum(comb(p, 2) for p in conjugate(lam))


def eta_from_characters(lam: Iterable[int]) -> Fraction:
    lam = Partition(lam)
    d = lam.size
    if d < 2:
        return Fraction(0)
    transposition = Partition((2,) + (1,) * (d - 2))
    ratio = Fraction(character(lam, transposition), character(lam, (1,) * d))
    return class_size(transposition) * ratio


def hook_character_polynomial(beta: Iterable[int]) -> list[int]:
    """Coefficients of ``prod (1 - (-y)**i)**c_i`` up to ``y**(d-1)``.

    Entry ``k`` is the character of the hook shape ``(d-k, 1^k)`` on ``beta``.
    """
    beta = Partition(beta)
    d = beta.size
    if d == 0:
        raise PreconditionError("beta must be non-empty")
    poly = UnivariateSeries.constant(1, d - 1)
    for i, c in hook_content_counts(beta).items():
        factor = UnivariateSeries.from_function(
            lambda k: 1 if k == 0 else (-(-1) ** i if k == i else 0), d - 1
        )
        poly = poly * factor**c
    return [int(c) for c in poly]
