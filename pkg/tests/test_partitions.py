import pytest
from hypothesis import given, strategies as st

from hallwright.partitions import (
    Partition,
    cup,
    dominates,
    parse_partition,
    partition_n,
    partitions,
    repeat_parts,
    rev_lex_less,
)

parts = st.lists(st.integers(1, 5), max_size=5).map(Partition.from_parts)


def test_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_n_statistic():
    assert partition_n(Partition((2, 1))) == 1
    assert partition_n(Partition((1, 1, 1))) == 3
    assert partition_n(Partition(())) == 0


@given(parts)
def test_n_via_conjugate(lam):
    conj = lam.conjugate()
    assert lam.n() == sum(c * (c - 1) // 2 for c in conj)
    assert conj.conjugate() == lam


def test_cup_and_repeat():
    assert cup((3, 1), (2, 2)) == (3, 2, 2, 1)
    assert repeat_parts((2, 1), 2) == (2, 2, 1, 1)


def test_reverse_lex():
    assert rev_lex_less((2,), (1, 1))
    assert not rev_lex_less((1, 1), (2,))
    # the order is read literally: a larger first part is smaller
    assert rev_lex_less((3,), (2, 1))
    with pytest.raises(ValueError):
        rev_lex_less((2,), (1,))


@given(st.integers(1, 7))
def test_reverse_lex_is_total(n):
    ps = partitions(n)
    for a in ps:
        for b in ps:
            if a != b:
                assert rev_lex_less(a, b) != rev_lex_less(b, a)


def test_dominance():
    assert dominates((3,), (2, 1))
    assert not dominates((2, 2), (3, 1))


def test_parse():
    assert parse_partition("[3,1]") == (3, 1)
    assert parse_partition("[]") == ()
    with pytest.raises(ValueError):
        parse_partition("[1,3")
