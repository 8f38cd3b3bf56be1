import pytest
from hypothesis import given, strategies as st

from chromasym.partitions import (epsilon, epsilon_minus, format_partition,
                                  make_partition, multiplicities,
                                  parse_partition, partitions_of, remove_part,
                                  support, union)

EPSILON_TABLE = {
    (2,): 1, (3,): 2, (4,): 3, (2, 2): 1, (5,): 4, (3, 2): 4,
    (6,): 5, (4, 2): 6, (3, 3): 4, (2, 2, 2): 1,
    (7,): 6, (5, 2): 8, (4, 3): 12, (3, 2, 2): 6,
    (8,): 7, (6, 2): 10, (5, 3): 16, (4, 4): 9, (4, 2, 2): 9,
    (3, 3, 2): 12, (2, 2, 2, 2): 1,
}

part_lists = st.lists(st.integers(min_value=1, max_value=9), max_size=6)


def brute_force_partition_count(n):
    # nested loops over multiplicity vectors; independent of partitions_of
    count = 0
    caps = [n // i for i in range(1, n + 1)]

    def walk(i, remaining):
        nonlocal count
        if i > n:
            if remaining == 0:
                count += 1
            return
        for m in range(0, min(caps[i - 1], remaining // i) + 1):
            walk(i + 1, remaining - m * i)

    if n == 0:
        return 1
    walk(1, n)
    return count


def test_make_partition_sorts():
    assert make_partition([2, 3, 2]) == (3, 2, 2)
    assert make_partition([]) == ()
    assert make_partition([5, 2]) == (5, 2)


def test_make_partition_idempotent():
    assert make_partition((3, 2, 2)) == (3, 2, 2)


@pytest.mark.parametrize("bad", [[0], [-1], [2, 0], [1.5], [True]])
def test_make_partition_rejects_nonpositive(bad):
    with pytest.raises((ValueError, TypeError)):
        make_partition(bad)


def test_epsilon_table():
    for lam, want in EPSILON_TABLE.items():
        assert epsilon(lam) == want, lam
    assert epsilon(()) == 1


def test_epsilon_examples():
    assert epsilon((5, 2)) == 8
    assert epsilon((3, 3, 2)) == 12
    assert epsilon((4, 1)) == 0
    assert epsilon((2, 2, 2, 2)) == 1


@given(st.integers(min_value=1, max_value=60))
def test_epsilon_single_part(n):
    assert epsilon((n,)) == n - 1


@given(st.integers(min_value=1, max_value=15))
def test_epsilon_all_twos(k):
    assert epsilon((2,) * k) == 1


@given(part_lists)
def test_epsilon_vanishes_iff_one_is_a_part(parts):
    lam = make_partition(parts)
    assert (epsilon(lam) == 0) == (1 in lam)


@given(part_lists)
def test_epsilon_removal_expansion(parts):
    lam = make_partition(parts)
    if lam:
        assert epsilon(lam) == sum((j - 1) * epsilon_minus(lam, j)
                                   for j in support(lam))


@given(part_lists)
def test_epsilon_scaling(parts):
    lam = make_partition(parts)
    mult = multiplicities(lam)
    for j in support(lam):
        assert (j - 1) * epsilon_minus(lam, j) * len(lam) == mult[j] * epsilon(lam)


def test_remove_part():
    assert remove_part((5, 2), 2) == (5,)
    assert remove_part((5, 2), 3) is None
    assert remove_part((2, 2), 2) == (2,)


def test_epsilon_minus_absent_is_zero():
    assert epsilon_minus((5, 2), 3) == 0
    assert epsilon_minus((5, 2), 2) == epsilon((5,)) == 4
    assert epsilon_minus((3, 3), 3, 3) == 1
    assert epsilon_minus((3, 3), 3, 2) == 0


def test_union():
    assert union((3, 2), (2,)) == (3, 2, 2)
    assert union((), (4,)) == (4,)
    assert union((5,), (5,)) == (5, 5)


@given(part_lists, part_lists)
def test_union_size_and_length(a, b):
    lam, mu = make_partition(a), make_partition(b)
    both = union(lam, mu)
    assert sum(both) == sum(lam) + sum(mu)
    assert len(both) == len(lam) + len(mu)


def test_partitions_of_small():
    assert partitions_of(0) == [()]
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_partitions_of_count_matches_brute_force():
    # frozen from the nested-loop enumerator: p(8) = 22
    assert brute_force_partition_count(8) == 22
    assert len(partitions_of(8)) == 22
    for n in range(0, 13):
        assert len(partitions_of(n)) == brute_force_partition_count(n)


def test_partitions_of_reverse_lex_and_distinct():
    for n in range(0, 10):
        plist = partitions_of(n)
        assert plist == sorted(plist, reverse=True)
        assert len(set(plist)) == len(plist)
        assert all(sum(lam) == n for lam in plist)


def test_partitions_of_rejects_negative():
    with pytest.raises(ValueError):
        partitions_of(-1)


def test_parse_and_format():
    assert parse_partition("5,2") == (5, 2)
    assert parse_partition("0") == ()
    assert parse_partition("") == ()
    assert parse_partition("2,3,2") == (3, 2, 2)
    assert format_partition((5, 2)) == "5,2"
    assert format_partition(()) == "0"
    with pytest.raises(ValueError):
        parse_partition("a,b")
    with pytest.raises(ValueError):
        parse_partition("3,-1")
