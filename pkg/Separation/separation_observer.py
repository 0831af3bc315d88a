"""
Holds the interface for observers of the separation pipeline. The pipeline reports every shadow-closure round,
every branch (path edge) it tries, the 2-SAT formula it builds for a branch and how the branch ended. Used by the
harness to print closure traces and dump formulas, and by tests to look inside a run.
"""

from typing import List, Optional, Tuple

from Common.geo_types import Edge
from Common.twosat import TwoSatFormula
from Common.validation import validate_types
from Common.vertex_set import VertexSet


class SeparationObserver:
    # pylint: disable=no-self-use, unused-argument
    """
    The main interface for separation observers with no action taken
    """

    def closure_round(self, round_index: int, a: VertexSet, b: VertexSet) -> None:
        """
        An event handler for a completed round of the shadow closure.

        :param round_index: The 1-based number of the round
        :param a:           The A side after the round
        :param b:           The B side after the round
        """

    def branch_started(self, index: int, edge: Edge) -> None:
        """
        An event handler for the start of a branch of the separation pipeline.

        :param index:   The 0-based position of the path edge
        :param edge:    The path edge (u_i, u_i+1)
        """

    def formula_built(self, index: int, formula: TwoSatFormula) -> None:
        """
        An event handler for a formula built for a shadow-closed pair.

        :param index:   The branch the formula belongs to (-1 outside of halfspace_separation)
        :param formula: The formula
        """

    def branch_finished(self, index: int, status: str) -> None:
        """
        An event handler for the end of a branch.

        :param index:   The branch
        :param status:  "YES" or the reason the branch failed
        """


class LoggingSeparationObserver(SeparationObserver):
    """
    A separation observer that records every event in order
    """

    def __init__(self) -> None:
        self.rounds: List[Tuple[int, VertexSet, VertexSet]] = []
        self.branches: List[Tuple[int, Edge]] = []
        self.formulas: List[Tuple[int, TwoSatFormula]] = []
        self.finished: List[Tuple[int, str]] = []
        self.events: List[str] = []

    @validate_types
    def closure_round(self, round_index: int, a: VertexSet, b: VertexSet) -> None:
        self.rounds.append((round_index, a, b))
        self.events.append(f"closure_round: {round_index} A={a} B={b}")

    @validate_types
    def branch_started(self, index: int, edge: Edge) -> None:
        self.branches.append((index, edge))
        self.events.append(f"branch_started: {index} {edge}")

    @validate_types
    def formula_built(self, index: int, formula: TwoSatFormula) -> None:
        self.formulas.append((index, formula))
        self.events.append(f"formula_built: {index} {formula}")

    @validate_types
    def branch_finished(self, index: int, status: str) -> None:
        self.finished.append((index, status))
        self.events.append(f"branch_finished: {index} {status}")

    def last_formula(self) -> Optional[TwoSatFormula]:
        """
        :return:    The most recently built formula, if any
        """
        return self.formulas[-1][1] if self.formulas else None

    @validate_types
    def all_messages(self) -> List[str]:
        """
        Get all of the events logged to this observer
        :return:    A list of strings representing the logged events, in the order they happened
        """
        return list(self.events)
