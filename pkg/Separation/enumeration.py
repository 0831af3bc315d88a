"""
Enumeration of all halfspaces of a graph.

`enumerate_flashlight` walks the tree of partial assignments (In, Out) over the vertices 0..n-1 and only descends
into a child when halfspace separation says some halfspace contains In and avoids Out. Every visited node therefore
lies above at least one output halfspace, and the number of separation calls stays within 2 n times the output size
on graphs where separation is exact. `enumerate_bruteforce` filters all 2^n subsets and serves as the oracle.
"""
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from Common.constants import MAX_BRUTEFORCE_VERTICES
from Common.convexity import is_convex_mask
from Common.geo_types import JSON
from Common.graph import DistanceMatrix, Graph
from Common.result import Result, error, ok
from Common.validation import validate_types
from Common.vertex_set import VertexSet
from Metric.graph_classes import certify
from Separation.separator import halfspace_separation


@dataclass(frozen=True)
class HalfspaceList:
    """
    Halfspaces in canonical order (by size, then lexicographically by members), without duplicates.

    `extension_calls` counts the separation calls made to produce the list (0 for brute force) and `incomplete`
    lists the partial assignments (In, Out) whose extension was UNKNOWN and whose subtree was therefore skipped.
    """

    halfspaces: Tuple[VertexSet, ...]
    extension_calls: int = 0
    incomplete: Tuple[Tuple[VertexSet, VertexSet], ...] = ()

    def __post_init__(self) -> None:
        keys = [halfspace.sort_key() for halfspace in self.halfspaces]
        if any(not earlier < later for earlier, later in zip(keys, keys[1:])):
            raise ValueError("halfspaces must be distinct and in canonical order")

    @staticmethod
    def of(
        halfspaces: List[VertexSet],
        extension_calls: int = 0,
        incomplete: Tuple[Tuple[VertexSet, VertexSet], ...] = (),
    ) -> "HalfspaceList":
        """
        :return:    A HalfspaceList holding the given halfspaces sorted into canonical order
        """
        return HalfspaceList(
            tuple(sorted(set(halfspaces), key=VertexSet.sort_key)), extension_calls, incomplete
        )

    def as_set(self) -> FrozenSet[VertexSet]:
        return frozenset(self.halfspaces)

    def is_complete(self) -> bool:
        return not self.incomplete

    def __len__(self) -> int:
        return len(self.halfspaces)

    def __contains__(self, item: object) -> bool:
        return item in self.as_set()

    def summary(self) -> Dict[str, JSON]:
        return {
            "count": len(self.halfspaces),
            "halfspaces": [halfspace.to_json() for halfspace in self.halfspaces],
            "extension_calls": self.extension_calls,
            "incomplete": [[inside.to_json(), outside.to_json()] for inside, outside in self.incomplete],
        }


@validate_types
def enumerate_flashlight(
    g: Graph, d: DistanceMatrix, certified: Optional[bool] = None
) -> HalfspaceList:
    """
    Enumerate the halfspaces of g by flashlight search, using halfspace separation as the extension oracle.

    :param g:           The graph
    :param d:           Its distance matrix
    :param certified:   Whether g is in one of the classes separation is exact on (computed when None). On other
                        graphs the output is sound but may be incomplete.
    :return:            The halfspaces, including the empty set and V
    """
    if certified is None:
        certified = certify(g, d) is not None
    if not certified:
        logging.warning(
            f"enumerating halfspaces of a graph without a class certificate, the result may be incomplete: {g}"
        )

    found: List[VertexSet] = []
    incomplete: List[Tuple[VertexSet, VertexSet]] = []
    calls = 0

    def visit(vertex: int, inside: VertexSet, outside: VertexSet) -> None:
        nonlocal calls
        if vertex == g.n:
            found.append(inside)
            return
        for child_in, child_out in (
            (inside.with_vertex(vertex), outside),
            (inside, outside.with_vertex(vertex)),
        ):
            calls += 1
            answer = halfspace_separation(g, d, child_in, child_out, certified).assert_value().answer
            if answer == "YES":
                visit(vertex + 1, child_in, child_out)
            elif answer == "UNKNOWN":
                incomplete.append((child_in, child_out))

    visit(0, VertexSet(), VertexSet())
    logging.debug(f"flashlight search found {len(found)} halfspaces with {calls} extension calls")
    return HalfspaceList.of(found, calls, tuple(incomplete))


@validate_types
def enumerate_bruteforce(
    g: Graph, d: DistanceMatrix, max_vertices: int = MAX_BRUTEFORCE_VERTICES
) -> Result[HalfspaceList]:
    """
    Enumerate the halfspaces of g by testing every subset of its vertices.

    :param g:               The graph
    :param d:               Its distance matrix
    :param max_vertices:    Refuse graphs with more vertices than this
    :return:                A result containing the halfspaces, including the empty set and V
    """
    if g.n > max_vertices:
        return error(f"cannot brute force the halfspaces of {g.n} vertices (limit is {max_vertices})")
    full = (1 << g.n) - 1
    found = [
        VertexSet(mask)
        for mask in range(full + 1)
        if is_convex_mask(d, mask) and is_convex_mask(d, full & ~mask)
    ]
    return ok(HalfspaceList.of(found))
