"""
Brute-force cross-checking of the separation pipeline. The halfspaces found by exhaustive enumeration answer every
separation query directly, which makes them an oracle for `halfspace_separation` on small graphs.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from Common.constants import MAX_BRUTEFORCE_VERTICES
from Common.geo_types import JSON, Answer
from Common.graph import DistanceMatrix, Graph
from Common.result import Result, ok
from Common.validation import validate_types
from Common.vertex_set import VertexSet
from Metric.graph_classes import certify
from Separation.enumeration import HalfspaceList, enumerate_bruteforce
from Separation.separator import halfspace_separation


@validate_types
def separating_halfspaces(halfspaces: HalfspaceList, a: VertexSet, b: VertexSet) -> List[VertexSet]:
    """
    :return:    Every listed halfspace H with A inside H and B outside of it, in canonical order
    """
    return [h for h in halfspaces.halfspaces if a.issubset(h) and h.isdisjoint(b)]


@validate_types
def oracle_answer(halfspaces: HalfspaceList, a: VertexSet, b: VertexSet) -> Answer:
    """
    :return:    "YES" if some listed halfspace separates A from B, otherwise "NO"
    """
    return "YES" if separating_halfspaces(halfspaces, a, b) else "NO"


@dataclass(frozen=True)
class OracleMismatch:
    a: VertexSet
    b: VertexSet
    expected: Answer
    actual: Answer

    def summary(self) -> Dict[str, JSON]:
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "expected": self.expected,
            "actual": self.actual,
        }


@dataclass(frozen=True)
class OracleReport:
    """
    The result of comparing the pipeline with the oracle on every query of a graph. On a certified graph an UNKNOWN
    answer counts as a mismatch; elsewhere it is only tallied in `unknown`.
    """

    certified: bool
    instances: int
    unknown: int
    mismatches: Tuple[OracleMismatch, ...]

    def passed(self) -> bool:
        return not self.mismatches

    def summary(self) -> Dict[str, JSON]:
        return {
            "certified": self.certified,
            "instances": self.instances,
            "unknown": self.unknown,
            "mismatches": [mismatch.summary() for mismatch in self.mismatches],
        }


def small_sets(n: int, max_size: int) -> List[VertexSet]:
    """
    :return:    Every nonempty subset of 0..n-1 with at most max_size members, in canonical order
    """
    return [
        VertexSet.of(members)
        for size in range(1, max_size + 1)
        for members in combinations(range(n), size)
    ]


@validate_types
def oracle_check(
    g: Graph,
    d: DistanceMatrix,
    max_ab: int = 2,
    certified: Optional[bool] = None,
    max_vertices: int = MAX_BRUTEFORCE_VERTICES,
) -> Result[OracleReport]:
    """
    Compare halfspace_separation with the brute-force oracle on every ordered pair of disjoint nonempty sets A, B
    with at most max_ab members each.

    :param g:               The graph
    :param d:               Its distance matrix
    :param max_ab:          The largest size of A and B
    :param certified:       Whether g is in one of the classes separation is exact on (computed when None)
    :param max_vertices:    Refuse graphs with more vertices than this, since the oracle enumerates all subsets
    :return:                A result containing the report
    """
    halfspaces_r = enumerate_bruteforce(g, d, max_vertices)
    if halfspaces_r.is_error():
        return halfspaces_r  # type: ignore
    halfspaces = halfspaces_r.value()
    if certified is None:
        certified = certify(g, d) is not None

    instances = 0
    unknown = 0
    mismatches = []
    candidates = small_sets(g.n, max_ab)
    for a in candidates:
        for b in candidates:
            if not a.isdisjoint(b):
                continue
            instances += 1
            expected = oracle_answer(halfspaces, a, b)
            actual = halfspace_separation(g, d, a, b, certified).assert_value().answer
            if actual == "UNKNOWN" and not certified:
                unknown += 1
            elif actual != expected:
                mismatches.append(OracleMismatch(a, b, expected, actual))
    return ok(OracleReport(certified, instances, unknown, tuple(mismatches)))
