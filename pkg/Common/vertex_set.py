"""
A module that holds VertexSet, the immutable set of vertices every hull, shadow, interval and halfspace in this
codebase is expressed as. A VertexSet is a Python int used as a bitmask: bit i is set iff vertex i is a member,
so union, intersection and containment are single integer operations.

VertexSet does not know the size of the graph it belongs to. Operations that need the universe (complement)
take the vertex count explicitly, and graph operations validate ids against the graph.
"""
from typing import Any, Iterable, Iterator, List, Tuple


def iter_bits(mask: int) -> Iterator[int]:
    """
    Iterate over the indices of the set bits of the given mask in increasing order

    :param mask:    A non-negative int
    :return:        An iterator of bit indices
    """
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    """
    :param mask:    A non-negative int
    :return:        The number of set bits in mask
    """
    return bin(mask).count("1")


class VertexSet:
    """
    Represents an immutable set of dense 0-based vertex ids stored as a bitmask. Equality, hashing and ordering
    only depend on the members.
    """

    mask: int

    def __init__(self, mask: int = 0) -> None:
        if not isinstance(mask, int) or isinstance(mask, bool) or mask < 0:
            raise ValueError("VertexSet must be given a non-negative integer bitmask!")
        self.mask = mask

    @staticmethod
    def of(vertices: Iterable[int]) -> "VertexSet":
        """
        Build a VertexSet from an iterable of vertex ids

        :param vertices:    The vertex ids (duplicates are fine)
        :return:            The VertexSet containing exactly those ids
        """
        mask = 0
        for vertex in vertices:
            if not isinstance(vertex, int) or vertex < 0:
                raise ValueError(f"invalid vertex id {vertex!r} in VertexSet")
            mask |= 1 << vertex
        return VertexSet(mask)

    @staticmethod
    def full(n: int) -> "VertexSet":
        """
        :param n:   The number of vertices in the graph
        :return:    The VertexSet {0, ..., n-1}
        """
        return VertexSet((1 << n) - 1)

    def members(self) -> Tuple[int, ...]:
        """
        :return:    The members of this set in increasing order
        """
        return tuple(iter_bits(self.mask))

    def is_empty(self) -> bool:
        """
        :return:    Whether this set has no members
        """
        return self.mask == 0

    def first(self) -> int:
        """
        :return:    The smallest member of this set. Raises a ValueError on the empty set.
        """
        if self.mask == 0:
            raise ValueError("the empty VertexSet has no first member")
        return (self.mask & -self.mask).bit_length() - 1

    def union(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & ~other.mask)

    def with_vertex(self, vertex: int) -> "VertexSet":
        """
        :param vertex:  The vertex to add
        :return:        A new VertexSet containing the members of this set and the given vertex
        """
        return VertexSet(self.mask | (1 << vertex))

    def complement(self, n: int) -> "VertexSet":
        """
        :param n:   The number of vertices in the graph
        :return:    {0, ..., n-1} minus this set
        """
        return VertexSet(((1 << n) - 1) & ~self.mask)

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.mask & other.mask == 0

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        """
        The canonical order of vertex sets: by size, then lexicographically by sorted members

        :return:    A key usable with sorted()
        """
        return (len(self), self.members())

    def to_json(self) -> List[int]:
        """
        :return:    The members of this set as a JSON list
        """
        return list(self.members())

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return self.union(other)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return self.intersection(other)

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return self.difference(other)

    def __le__(self, other: "VertexSet") -> bool:
        return self.issubset(other)

    def __contains__(self, vertex: Any) -> bool:
        return isinstance(vertex, int) and vertex >= 0 and bool(self.mask >> vertex & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return popcount(self.mask)

    def __str__(self) -> str:
        return "VertexSet({%s})" % ", ".join(str(v) for v in self.members())

    def __repr__(self) -> str:
        return str(self)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, VertexSet):
            return self.mask == other.mask
        return False

    def __hash__(self) -> int:
        return hash(self.mask)
