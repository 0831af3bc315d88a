"""
Shadows and the shadow closure, the first step of the separation pipeline.

The shadow A/B of A with respect to B is the set of vertices x such that hull(B + x) meets A. Any halfspace H with
A in H and B outside of H must contain hull(A/B), so growing A to hull(A/B) and B to hull(B/A) until neither changes
loses no separating halfspace. The fixpoint is a shadow-closed pair.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from Common.convexity import hull_mask, is_convex_mask
from Common.geo_types import JSON, Edge
from Common.graph import EMPTY_SET_ERROR, DistanceMatrix, Graph
from Common.result import Result, error, ok
from Common.validation import validate_types
from Common.vertex_set import VertexSet, iter_bits
from Separation.separation_observer import SeparationObserver


@dataclass(frozen=True)
class ShadowClosedPair:
    """
    Two disjoint, nonempty, convex, shadow-closed vertex sets joined by at least one edge, together with the
    vertices outside both (the residue) and the edges between them (a in A first). Built by `make_pair`, which
    checks all of this, or by the pipeline from a closure fixpoint.
    """

    a: VertexSet
    b: VertexSet
    residue: VertexSet
    ab_edges: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        if self.a.is_empty() or self.b.is_empty():
            raise ValueError("both sides of a ShadowClosedPair must be nonempty")
        if not self.a.isdisjoint(self.b) or not self.residue.isdisjoint(self.a | self.b):
            raise ValueError("the sides and the residue of a ShadowClosedPair must be disjoint")
        if not self.ab_edges:
            raise ValueError("the sides of a ShadowClosedPair must be joined by an edge")

    def summary(self) -> Dict[str, JSON]:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "residue": self.residue.to_json(),
            "ab_edges": [list(edge) for edge in self.ab_edges],
        }


def shadow_mask(d: DistanceMatrix, a: int, b: int) -> int:
    """
    :param d:   The distance matrix of the graph
    :param a:   A nonempty bitmask
    :param b:   A nonempty bitmask disjoint from a
    :return:    The shadow of a with respect to b, as a bitmask
    """
    result = a
    for x in range(d.n):
        if not result >> x & 1 and hull_mask(d, b | 1 << x) & a:
            result |= 1 << x
    return result


def _check_sides(g: Graph, a: VertexSet, b: VertexSet) -> Optional[str]:
    if a.is_empty() or b.is_empty():
        return f"{EMPTY_SET_ERROR}: both A and B must be nonempty"
    if not g.contains_set(a) or not g.contains_set(b):
        return f"A={a} and B={b} must be subsets of the vertices of {g}"
    if not a.isdisjoint(b):
        return f"A={a} and B={b} must be disjoint"
    return None


@validate_types
def shadow(g: Graph, d: DistanceMatrix, a: VertexSet, b: VertexSet) -> Result[VertexSet]:
    """
    :param g:   The graph
    :param d:   Its distance matrix
    :param a:   A nonempty vertex set
    :param b:   A nonempty vertex set disjoint from A
    :return:    A result containing A/B = {x : hull(B + x) meets A}, which always contains A
    """
    problem = _check_sides(g, a, b)
    if problem is not None:
        return error(problem)
    return ok(VertexSet(shadow_mask(d, a.mask, b.mask)))


@validate_types
def shadow_closure(
    g: Graph,
    d: DistanceMatrix,
    a: VertexSet,
    b: VertexSet,
    observer: Optional[SeparationObserver] = None,
) -> Result[Tuple[VertexSet, VertexSet]]:
    """
    Replace A by hull(A/B) and B by hull(B/A) simultaneously (both shadows are taken from the previous pair) until
    neither changes. Stops early as soon as the two sides intersect; the caller treats that as a failure since no
    halfspace separates intersecting sets.

    :param g:           The graph
    :param d:           Its distance matrix
    :param a:           A nonempty vertex set
    :param b:           A nonempty vertex set disjoint from A
    :param observer:    Receives a closure_round event per round that changed the pair
    :return:            A result containing the closed pair (A*, B*), which may intersect
    """
    problem = _check_sides(g, a, b)
    if problem is not None:
        return error(problem)
    current_a, current_b = a.mask, b.mask
    round_index = 0
    while True:
        next_a = hull_mask(d, shadow_mask(d, current_a, current_b))
        next_b = hull_mask(d, shadow_mask(d, current_b, current_a))
        if next_a == current_a and next_b == current_b:
            break
        current_a, current_b = next_a, next_b
        round_index += 1
        if observer is not None:
            observer.closure_round(round_index, VertexSet(current_a), VertexSet(current_b))
        if current_a & current_b:
            logging.debug(f"shadow closure of {a} and {b} overlaps after round {round_index}")
            break
    return ok((VertexSet(current_a), VertexSet(current_b)))


def pair_from_closure(g: Graph, a: VertexSet, b: VertexSet) -> ShadowClosedPair:
    """
    Assemble the pair for a closure fixpoint without re-checking shadow closure and convexity. The sides must be
    disjoint and joined by an edge.
    """
    ab_edges = tuple(
        (u, v) for u in a for v in iter_bits(g.neighbor_mask(u) & b.mask)
    )
    return ShadowClosedPair(a, b, (a | b).complement(g.n), ab_edges)


@validate_types
def make_pair(
    g: Graph, d: DistanceMatrix, a: VertexSet, b: VertexSet
) -> Result[ShadowClosedPair]:
    """
    Validate that (A, B) is a shadow-closed pair and compute its residue and its A-B edges.

    :param g:   The graph
    :param d:   Its distance matrix
    :param a:   A vertex set
    :param b:   A vertex set
    :return:    A result containing the pair, or an error naming the first failed requirement
    """
    problem = _check_sides(g, a, b)
    if problem is not None:
        return error(problem)
    for name, side in (("A", a), ("B", b)):
        if not is_convex_mask(d, side.mask):
            return error(f"{name}={side} is not convex")
    if not any(g.neighbor_mask(u) & b.mask for u in a):
        return error(f"no edge joins A={a} and B={b}")
    if shadow_mask(d, a.mask, b.mask) != a.mask:
        return error(f"A={a} is not shadow-closed with respect to B={b}")
    if shadow_mask(d, b.mask, a.mask) != b.mask:
        return error(f"B={b} is not shadow-closed with respect to A={a}")
    return ok(pair_from_closure(g, a, b))
