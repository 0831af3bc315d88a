"""
Halfspace separation: given disjoint vertex sets A and B, find a halfspace H with A inside H and B outside it.

The pipeline fixes the lexicographically smallest shortest path u_1 .. u_k from A to B. A separating halfspace
must cut exactly one edge u_i u_i+1 of that path, so each path edge is tried as a branch: the sides A + u_i and
B + u_i+1 are shadow-closed, the closed pair is reduced to a 2-SAT formula, and a model yields the candidate
H = A* + {x : a_x true}. Every candidate is checked to be a halfspace before it is returned, so a YES is always
sound. On graphs certified weakly bridged, pseudo-modular or a matroid basis graph candidate a NO is exact as well;
elsewhere a branch that cannot be decided makes the answer UNKNOWN.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from Common.convexity import hull_mask, is_convex_mask
from Common.geo_types import JSON, Answer, Edge
from Common.graph import DistanceMatrix, Graph, shortest_connecting_path
from Common.result import Result, error, ok
from Common.twosat import solve
from Common.validation import invariant_checking_enabled, validate_types
from Common.vertex_set import VertexSet
from Metric.graph_classes import certify, satisfies_tc
from Separation.formula import TC_PREREQUISITE_ERROR, build_formula
from Separation.invariants import (
    assert_ok,
    check_connected_sides,
    check_equidistance,
    check_nonempty_s_sets,
)
from Separation.separation_observer import SeparationObserver
from Separation.shadow import ShadowClosedPair, make_pair, pair_from_closure, shadow_closure

# Branch index used by separate_pair when it runs outside of a halfspace_separation branch
NO_BRANCH = -1

YES_STATUS = "YES"
UNSAT_STATUS = "formula-UNSAT"
OVERLAP_STATUS = "closure-overlap"
VERIFICATION_STATUS = "verification-failed"
TC_STATUS = "tc-prerequisite-failed"
UNKNOWN_STATUSES = (VERIFICATION_STATUS, TC_STATUS)


@dataclass(frozen=True)
class BranchDiagnostic:
    """
    How one branch of the pipeline ended. `status` is "YES" or one of the branch failure reasons.
    """

    index: int
    edge: Optional[Edge]
    status: str
    detail: str = ""

    def summary(self) -> Dict[str, JSON]:
        return {
            "branch": self.index,
            "edge": None if self.edge is None else list(self.edge),
            "status": self.status,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class SeparationOutcome:
    """
    The answer to a separation query. A YES carries the halfspace and, when it came from a branch, the index of the
    path edge that produced it. `note` explains base-case answers that never reached a branch.
    """

    answer: Answer
    halfspace: Optional[VertexSet] = None
    branch: Optional[int] = None
    diagnostics: Tuple[BranchDiagnostic, ...] = ()
    note: Optional[str] = None

    def __post_init__(self) -> None:
        if (self.answer == "YES") != (self.halfspace is not None):
            raise ValueError("a SeparationOutcome has a halfspace iff its answer is YES")

    def summary(self) -> Dict[str, JSON]:
        return {
            "answer": self.answer,
            "halfspace": None if self.halfspace is None else self.halfspace.to_json(),
            "branch": self.branch,
            "diagnostics": [diagnostic.summary() for diagnostic in self.diagnostics],
            "note": self.note,
        }


def _combine(diagnostics: List[BranchDiagnostic]) -> Answer:
    if any(diagnostic.status in UNKNOWN_STATUSES for diagnostic in diagnostics):
        return "UNKNOWN"
    return "NO"


def _check_pair_invariants(g: Graph, d: DistanceMatrix, pair: ShadowClosedPair, has_tc: bool) -> None:
    assert_ok(make_pair(g, d, pair.a, pair.b).map(lambda _: None))
    assert_ok(check_equidistance(g, d, pair))
    if has_tc:
        assert_ok(check_nonempty_s_sets(g, d, pair))


@validate_types
def separate_pair(
    g: Graph,
    d: DistanceMatrix,
    pair: ShadowClosedPair,
    certified: Optional[bool] = None,
    observer: Optional[SeparationObserver] = None,
    branch: int = NO_BRANCH,
) -> Result[SeparationOutcome]:
    """
    Decide whether a shadow-closed pair can be extended to complementary halfspaces.

    :param g:           The graph
    :param d:           Its distance matrix
    :param pair:        The shadow-closed pair
    :param certified:   Whether g is in one of the classes the reduction is exact on (computed when None)
    :param observer:    Receives the formula_built event
    :param branch:      The branch index to report in events and diagnostics
    :return:            A result containing the outcome, with exactly one diagnostic unless the answer is YES.
                        The outcome is UNKNOWN if the formula could not be built or its model is not a halfspace.
    """
    formula_r = build_formula(g, d, pair)
    if formula_r.is_error():
        if not formula_r.error().startswith(TC_PREREQUISITE_ERROR):
            return error(formula_r.error())
        return ok(
            SeparationOutcome(
                "UNKNOWN",
                diagnostics=(BranchDiagnostic(branch, None, TC_STATUS, formula_r.error()),),
            )
        )
    pair_formula = formula_r.value()
    if observer is not None:
        observer.formula_built(branch, pair_formula.formula)

    assignment = solve(pair_formula.formula)
    if assignment is None:
        return ok(
            SeparationOutcome(
                "NO",
                diagnostics=(BranchDiagnostic(branch, None, UNSAT_STATUS),),
            )
        )

    chosen = pair.a.mask
    for variable in assignment.true_variables():
        chosen |= 1 << pair_formula.vertex_of(variable)
    candidate = VertexSet(chosen)
    if not (is_convex_mask(d, chosen) and is_convex_mask(d, candidate.complement(g.n).mask)):
        if certified is None:
            certified = certify(g, d) is not None
        detail = f"model yields {candidate}, which is not a halfspace"
        if certified:
            logging.error(f"verification failed on a certified graph: {detail} (pair A={pair.a}, B={pair.b})")
        return ok(
            SeparationOutcome(
                "UNKNOWN",
                diagnostics=(BranchDiagnostic(branch, None, VERIFICATION_STATUS, detail),),
            )
        )
    if invariant_checking_enabled():
        assert_ok(check_connected_sides(g, candidate))
    return ok(SeparationOutcome("YES", candidate))


@validate_types
def halfspace_separation(
    g: Graph,
    d: DistanceMatrix,
    a: VertexSet,
    b: VertexSet,
    certified: Optional[bool] = None,
    observer: Optional[SeparationObserver] = None,
) -> Result[SeparationOutcome]:
    """
    Decide whether some halfspace H contains A and avoids B.

    If A is empty the answer is YES with H empty; otherwise, if B is empty, it is YES with H = V. If the hulls of A and B
    meet the answer is NO. Otherwise every edge of the lexicographically smallest shortest A-B path is tried in order
    and the first branch producing a halfspace wins.

    :param g:           The graph
    :param d:           Its distance matrix
    :param a:           A vertex set
    :param b:           A vertex set disjoint from A
    :param certified:   Whether g is in one of the classes the pipeline is complete on (computed when None)
    :param observer:    Receives the pipeline events
    :return:            A result containing the outcome, or an error if A and B are not disjoint subsets of V
    """
    if not g.contains_set(a) or not g.contains_set(b):
        return error(f"A={a} and B={b} must be subsets of the vertices of {g}")
    if not a.isdisjoint(b):
        return error(f"A={a} and B={b} must be disjoint")
    if a.is_empty():
        return ok(SeparationOutcome("YES", VertexSet(), note="A is empty"))
    if b.is_empty():
        return ok(SeparationOutcome("YES", g.all_vertices(), note="B is empty"))
    if hull_mask(d, a.mask) & hull_mask(d, b.mask):
        return ok(SeparationOutcome("NO", note="the hulls of A and B intersect"))

    if certified is None:
        certified = certify(g, d) is not None
    path = shortest_connecting_path(g, d, a, b).assert_value()
    logging.debug(f"separating A={a} from B={b} along path {path}")

    checking = invariant_checking_enabled()
    has_tc = checking and satisfies_tc(g, d).holds
    diagnostics: List[BranchDiagnostic] = []
    for index, edge in enumerate(zip(path, path[1:])):
        if observer is not None:
            observer.branch_started(index, edge)
        closed_a, closed_b = shadow_closure(
            g, d, a.with_vertex(edge[0]), b.with_vertex(edge[1]), observer
        ).assert_value()
        if not closed_a.isdisjoint(closed_b):
            diagnostic = BranchDiagnostic(
                index, edge, OVERLAP_STATUS, f"closure reached A*={closed_a}, B*={closed_b}"
            )
        else:
            pair = pair_from_closure(g, closed_a, closed_b)
            if checking:
                _check_pair_invariants(g, d, pair, has_tc)
            outcome_r = separate_pair(g, d, pair, certified, observer, index)
            if outcome_r.is_error():
                return outcome_r
            outcome = outcome_r.value()
            if outcome.answer == "YES":
                if observer is not None:
                    observer.branch_finished(index, YES_STATUS)
                logging.debug(f"branch {index} on edge {edge} separates with H={outcome.halfspace}")
                return ok(
                    SeparationOutcome(
                        "YES", outcome.halfspace, index, tuple(diagnostics)
                    )
                )
            failed = outcome.diagnostics[0]
            diagnostic = BranchDiagnostic(index, edge, failed.status, failed.detail)
        logging.debug(f"branch {index} on edge {edge} failed: {diagnostic.status}")
        if observer is not None:
            observer.branch_finished(index, diagnostic.status)
        diagnostics.append(diagnostic)

    answer = _combine(diagnostics)
    if answer == "UNKNOWN" and certified:
        logging.error(f"undecided branch on a certified graph for A={a}, B={b}")
    return ok(SeparationOutcome(answer, diagnostics=tuple(diagnostics)))
