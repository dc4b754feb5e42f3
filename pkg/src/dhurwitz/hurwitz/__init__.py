"""Double Hurwitz numbers by several independent methods."""

from .brute import brute_force, brute_force_disconnected_r, factorization_counts
from .common import genus_from_r, r_value
from .exponential import EXPONENTIAL_FORMS, ExponentialForm, exponential_form
from .formulas import (
    closed_form,
    diagonal,
    genus0_mparts,
    one_part,
    one_part_closed,
    one_part_sinh,
    one_part_xi,
    two_two,
)
from .joincut import JoinCutReport, verify_join_cut
from .tables import (
    SeriesTable,
    build_series_table,
    connected,
    connected_r,
    disconnected,
    disconnected_character,
)

__all__ = [
    "brute_force",
    "brute_force_disconnected_r",
    "factorization_counts",
    "r_value",
    "genus_from_r",
    "closed_form",
    "one_part",
    "one_part_sinh",
    "one_part_xi",
    "one_part_closed",
    "diagonal",
    "two_two",
    "genus0_mparts",
    "SeriesTable",
    "build_series_table",
    "connected",
    "connected_r",
    "disconnected",
    "disconnected_character",
    "EXPONENTIAL_FORMS",
    "ExponentialForm",
    "exponential_form",
    "JoinCutReport",
    "verify_join_cut",
]
