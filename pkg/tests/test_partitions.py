import pytest
from hypothesis import given, strategies as st

from hecke_residual.partitions import (
    Bipartition,
    Partition,
    distinct_part_partitions,
    partition_count,
    partitions,
)

any_partition = st.integers(min_value=0, max_value=9).flatmap(lambda n: st.sampled_from(list(partitions(n))))


@pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (4, 5), (6, 11), (8, 22), (10, 42)])
def test_partition_counts(n, count):
    assert partition_count(n) == count
    assert len(list(partitions(n))) == count


def test_parts_must_be_weakly_decreasing():
    assert Partition((3, 1, 0)) == Partition((3, 1))
    with pytest.raises(ValueError):
        Partition((1, 3))
    with pytest.raises(ValueError):
        Partition((2, -1))
    assert Partition.parse("3,1").label() == "(3,1)"
    assert str(Partition((3, 1))) == "3,1"


def test_contents_follow_reading_order():
    assert Partition((2, 1)).contents() == [0, 1, -1]


@given(any_partition)
def test_conjugation_is_an_involution(lam):
    assert lam.conjugate().conjugate() == lam
    assert lam.conjugate().size == lam.size
    assert sorted(-c for c in lam.contents()) == sorted(lam.conjugate().contents())


@given(any_partition)
def test_content_counts_determine_the_partition(lam):
    counts = {}
    for c in lam.contents():
        counts[c] = counts.get(c, 0) + 1
    assert Partition.from_content_counts(counts) == lam


def test_bipartitions():
    b = Bipartition.parse("3,1|2")
    assert str(b) == "3,1|2"
    assert b.size == 6
    assert str(b.swap()) == "2|3,1"
    assert str(Bipartition.parse("|2")) == "|2"


def test_distinct_parts_by_parity():
    assert distinct_part_partitions(4, 1) == [(1, 3)]
    assert distinct_part_partitions(4, 0) == [(4,)]
    for parts in distinct_part_partitions(16, 1):
        assert sum(parts) == 16 and len(set(parts)) == len(parts) and all(p % 2 for p in parts)
