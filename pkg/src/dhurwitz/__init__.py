"""Exact double Hurwitz numbers and the structures built on them.

Every number is a :class:`fractions.Fraction`.  The canonical normalization
counts tuples ``(sigma, tau_1, ..., tau_r)`` of permutations with ``sigma``
of cycle type ``alpha``, transpositions ``tau_i`` and product of cycle type
``beta``, weighted by ``|Aut alpha| |Aut beta| / d!``.
"""

from .errors import (
    BoundError,
    HurwitzError,
    InconclusiveFitError,
    InconsistencyError,
    PreconditionError,
    ResourceLimitError,
)
from .hurwitz import (
    SeriesTable,
    brute_force,
    build_series_table,
    closed_form,
    connected,
    diagonal,
    disconnected,
    genus0_mparts,
    one_part,
    one_part_closed,
    r_value,
    two_two,
    verify_join_cut,
)
from .partitions import Partition, PaddedPartition, aut_order, partitions_of
from .symbols import PicIndex, closed_form_symbol, symbol, symbol_def, symbol_wittcor

__all__ = [
    "HurwitzError",
    "PreconditionError",
    "ResourceLimitError",
    "BoundError",
    "InconsistencyError",
    "InconclusiveFitError",
    "Partition",
    "PaddedPartition",
    "partitions_of",
    "aut_order",
    "r_value",
    "brute_force",
    "connected",
    "disconnected",
    "build_series_table",
    "SeriesTable",
    "closed_form",
    "one_part",
    "one_part_closed",
    "diagonal",
    "two_two",
    "genus0_mparts",
    "verify_join_cut",
    "PicIndex",
    "symbol",
    "symbol_def",
    "symbol_wittcor",
    "closed_form_symbol",
]

__version__ = "0.1.0"
