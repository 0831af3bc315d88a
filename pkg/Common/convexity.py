"""
Geodesic convexity: convex hulls and the convex, locally convex and halfspace predicates.

A set S is convex when it contains every shortest path between two of its members, i.e. I(u, v) is a subset of S
for all u, v in S. Everything here works directly on bitmasks and the precomputed interval masks of the
DistanceMatrix; the VertexSet API is a thin wrapper on top.
"""
from Common.graph import DistanceMatrix, Graph, induces_connected
from Common.validation import validate_types
from Common.vertex_set import VertexSet, iter_bits


def hull_mask(d: DistanceMatrix, mask: int) -> int:
    """
    Compute the convex hull of a bitmask by closing it under pairwise intervals. Only pairs involving a newly
    added vertex are examined in each round.

    :param d:       The distance matrix of the graph
    :param mask:    A set of vertices as a bitmask
    :return:        The smallest convex set containing the mask, as a bitmask
    """
    closed = 0
    pending = mask
    while pending:
        vertex = (pending & -pending).bit_length() - 1
        pending ^= 1 << vertex
        closed |= 1 << vertex
        grown = 0
        for other in iter_bits(closed):
            grown |= d.interval_mask(vertex, other)
        pending |= grown & ~closed
    return closed


def is_convex_mask(d: DistanceMatrix, mask: int) -> bool:
    members = list(iter_bits(mask))
    for i, u in enumerate(members):
        for v in members[i + 1 :]:
            if d.interval_mask(u, v) & ~mask:
                return False
    return True


@validate_types
def hull(g: Graph, d: DistanceMatrix, s: VertexSet) -> VertexSet:
    """
    :param g:   The graph
    :param d:   Its distance matrix
    :param s:   Any vertex set, possibly empty
    :return:    The smallest convex set containing S. hull(empty) is empty.
    """
    return VertexSet(hull_mask(d, s.mask))


@validate_types
def is_convex(g: Graph, d: DistanceMatrix, s: VertexSet) -> bool:
    """
    :return:    Whether S contains I(u, v) for all of its members u, v. The empty set and V are convex.
    """
    return is_convex_mask(d, s.mask)


@validate_types
def is_locally_convex(g: Graph, d: DistanceMatrix, s: VertexSet) -> bool:
    """
    A set is locally convex when it induces a connected subgraph and contains I(x, y) for every pair of its
    members at distance exactly 2.

    :param g:   The graph
    :param d:   Its distance matrix
    :param s:   A vertex set
    :return:    Whether S is locally convex
    """
    if not induces_connected(g, s):
        return False
    members = s.members()
    for i, x in enumerate(members):
        for y in members[i + 1 :]:
            if d.dist(x, y) == 2 and d.interval_mask(x, y) & ~s.mask:
                return False
    return True


@validate_types
def is_halfspace(g: Graph, d: DistanceMatrix, s: VertexSet) -> bool:
    """
    :return:    Whether both S and its complement V - S are convex
    """
    complement = ((1 << g.n) - 1) & ~s.mask
    return is_convex_mask(d, s.mask) and is_convex_mask(d, complement)
