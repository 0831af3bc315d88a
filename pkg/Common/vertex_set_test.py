# pylint: skip-file
from typing import List

import pytest
from hypothesis import given  # type: ignore
from hypothesis.strategies import integers, lists  # type: ignore

from Common.vertex_set import VertexSet, iter_bits, popcount


def test_vertex_set() -> None:
    with pytest.raises(ValueError):
        VertexSet(-1)
    with pytest.raises(ValueError):
        VertexSet(True)  # type: ignore
    with pytest.raises(ValueError):
        VertexSet.of([0, -2])

    assert VertexSet.of([3, 1, 1]) == VertexSet(0b1010)
    assert hash(VertexSet.of([3, 1])) == hash(VertexSet(0b1010))
    assert VertexSet.of([3, 1]) != VertexSet.of([3])
    assert VertexSet.of([1]) != 2
    assert str(VertexSet.of([4, 0])) == repr(VertexSet.of([0, 4])) == "VertexSet({0, 4})"
    assert str(VertexSet()) == "VertexSet({})"


def test_members_and_queries() -> None:
    s = VertexSet.of([5, 2, 7])
    assert s.members() == (2, 5, 7)
    assert list(s) == [2, 5, 7]
    assert len(s) == 3
    assert s.first() == 2
    assert 5 in s
    assert 4 not in s
    assert -1 not in s
    assert "5" not in s
    assert s.to_json() == [2, 5, 7]
    assert not s.is_empty()
    assert VertexSet().is_empty()
    with pytest.raises(ValueError):
        VertexSet().first()


def test_set_algebra() -> None:
    a = VertexSet.of([0, 1, 2])
    b = VertexSet.of([2, 3])
    assert a | b == a.union(b) == VertexSet.of([0, 1, 2, 3])
    assert a & b == a.intersection(b) == VertexSet.of([2])
    assert a - b == a.difference(b) == VertexSet.of([0, 1])
    assert a.with_vertex(6) == VertexSet.of([0, 1, 2, 6])
    assert a.complement(5) == VertexSet.of([3, 4])
    assert VertexSet.full(4) == VertexSet.of([0, 1, 2, 3])
    assert not a.isdisjoint(b)
    assert a.isdisjoint(VertexSet.of([4]))
    assert VertexSet.of([1, 2]) <= a
    assert VertexSet.of([1, 2]).issubset(a)
    assert not b.issubset(a)
    assert VertexSet().issubset(b)


def test_sort_key() -> None:
    sets = [VertexSet.of([0, 3]), VertexSet.of([2]), VertexSet(), VertexSet.of([0, 1, 2]), VertexSet.of([0, 2])]
    assert sorted(sets, key=VertexSet.sort_key) == [
        VertexSet(),
        VertexSet.of([2]),
        VertexSet.of([0, 2]),
        VertexSet.of([0, 3]),
        VertexSet.of([0, 1, 2]),
    ]


def test_bit_helpers() -> None:
    assert list(iter_bits(0)) == []
    assert list(iter_bits(0b100101)) == [0, 2, 5]
    assert popcount(0) == 0
    assert popcount(0b1011) == 3
    assert popcount(1 << 40) == 1


@given(lists(integers(0, 40)), lists(integers(0, 40)))  # type: ignore
def test_matches_python_sets(first: List[int], second: List[int]) -> None:
    a, b = VertexSet.of(first), VertexSet.of(second)
    assert set(a | b) == set(first) | set(second)
    assert set(a & b) == set(first) & set(second)
    assert set(a - b) == set(first) - set(second)
    assert a.isdisjoint(b) == set(first).isdisjoint(set(second))
    assert a.issubset(b) == set(first).issubset(set(second))
    assert len(a) == len(set(first))
    assert a.members() == tuple(sorted(set(first)))
