from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy.functions.combinatorial.numbers import partition as sympy_partition_count

from dhurwitz.errors import PreconditionError
from dhurwitz.partitions import (
    PaddedPartition,
    Partition,
    aut_order,
    class_size,
    conjugate,
    hook_content_counts,
    multiset_difference,
    padded_partitions,
    parse_rational,
    partitions_of,
    shifted_power_sum,
    sub_multisets,
)

partitions = st.integers(min_value=1, max_value=12).flatmap(lambda d: st.sampled_from(partitions_of(d)))


def test_partitions_of_small_cases():
    assert partitions_of(0) == [()]
    assert partitions_of(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(partitions_of(5)) == 7


@pytest.mark.parametrize("d", range(0, 21))
def test_partition_counts_match_sympy(d):
    assert len(partitions_of(d)) == sympy_partition_count(d)


@pytest.mark.parametrize("d", range(1, 11))
def test_reverse_lexicographic_order(d):
    listed = [tuple(p) for p in partitions_of(d)]
    assert listed == sorted(listed, reverse=True)
    assert len(set(listed)) == len(listed)


def test_padded_partitions():
    assert padded_partitions(0, 3) == [(0, 0, 0)]
    assert padded_partitions(1, 2) == [(1, 0)]
    assert padded_partitions(2, 2) == [(2, 0), (1, 1)]
    assert all(isinstance(p, PaddedPartition) for p in padded_partitions(4, 3))


def test_aut_order_examples():
    assert aut_order((2, 1)) == 1
    assert aut_order((1, 1, 1)) == 6
    assert aut_order(PaddedPartition((0, 0, 0))) == 6


def test_class_sizes():
    assert class_size(Partition((3,))) == 2
    assert class_size(Partition((1, 1, 1))) == 1
    assert class_size(Partition((2, 1))) == 3


@pytest.mark.parametrize("d", range(1, 10))
def test_class_sizes_sum_to_factorial(d):
    assert sum(class_size(p) for p in partitions_of(d)) == factorial(d)


def test_conjugate_examples():
    assert conjugate((3,)) == (1, 1, 1)
    assert conjugate((2, 1)) == (2, 1)
    assert conjugate((4, 2)) == (2, 2, 1, 1)


@given(partitions)
def test_conjugate_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


def test_shifted_power_sum():
    assert shifted_power_sum((1, 1), 2) == 1
    assert shifted_power_sum((5,), 2) == 24
    assert shifted_power_sum((2, 1, 1), 4) == 17
    with pytest.raises(PreconditionError):
        shifted_power_sum((2,), 3)


def test_hook_content_counts_examples():
    assert hook_content_counts(Partition((1, 1, 1))) == {1: 2}
    assert hook_content_counts(Partition((4,))) == {1: -1, 4: 1}
    assert hook_content_counts(Partition((2, 1))) == {1: 0, 2: 1}


@given(partitions)
def test_hook_content_sums(beta):
    c = hook_content_counts(beta)
    assert sum(h * ch for h, ch in c.items()) == beta.size - 1
    assert sum(c.values()) == beta.length - 1


@given(partitions)
def test_multiplicities_recover_size_and_length(beta):
    mult = beta.multiplicities()
    assert sum(i * n for i, n in mult.items()) == beta.size
    assert sum(mult.values()) == beta.length


def test_partition_validation_and_parsing():
    assert Partition((1, 3, 2)) == (3, 2, 1)
    assert Partition.parse("1,8,3") == (8, 3, 1)
    assert str(Partition((8, 3))) == "8,3"
    with pytest.raises(PreconditionError):
        Partition((2, 0))
    with pytest.raises(PreconditionError):
        Partition.parse("a,b")


@given(partitions)
def test_sub_multisets_complement(p):
    subs = sub_multisets(p)
    assert len(subs) == len(set(subs))
    for s in subs:
        rest = multiset_difference(p, s)
        assert rest is not None and Partition(tuple(rest) + tuple(s)) == p


def test_parse_rational():
    assert parse_rational("3/6") == parse_rational("1/2")
    with pytest.raises(PreconditionError):
        parse_rational("1/0")
