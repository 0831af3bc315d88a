"""
A small generic 2-SAT solver. Formulas are immutable: adding a clause returns a new formula sharing the clause
vector of the old one.

Satisfiability is decided on the implication graph. Every clause (a or b) contributes the edges not-a -> b and
not-b -> a, and the formula is unsatisfiable iff some variable shares a strongly connected component with its
negation. Otherwise a model is read off a topological order of the component graph.

The implication graph has 2 * var_count nodes: literal (v, True) is node 2v and (v, False) is node 2v + 1.
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence, Tuple

import networkx as nx  # type: ignore
from pyrsistent import pvector

from Common.constants import MAX_BRUTEFORCE_VARIABLES
from Common.result import Result, error, ok
from Common.validation import validate_types

# A literal is a variable index paired with its polarity (True for x, False for not-x)
Literal = Tuple[int, bool]
Clause = Tuple[Literal, Literal]


def negate(literal: Literal) -> Literal:
    return (literal[0], not literal[1])


def literal_node(literal: Literal) -> int:
    """
    :return:    The implication graph node of the given literal
    """
    variable, polarity = literal
    return 2 * variable + (0 if polarity else 1)


class TwoSatFormula:
    """
    Represents a conjunction of clauses of width at most two over the variables 0..var_count-1. A unit clause is
    stored as (l or l). Duplicate and tautological clauses are kept as they are.
    """

    var_count: int

    def __init__(self, var_count: int, clauses: Iterable[Clause] = ()) -> None:
        if not isinstance(var_count, int) or var_count < 0:
            raise ValueError("a TwoSatFormula must have a non-negative number of variables!")
        self.var_count = var_count
        self._clauses = pvector()
        for clause in clauses:
            self._check_clause(clause)
            self._clauses = self._clauses.append(clause)

    def _check_clause(self, clause: Clause) -> None:
        for variable, polarity in clause:
            if not isinstance(polarity, bool):
                raise ValueError(f"literal polarity must be a bool in clause {clause}")
            if not 0 <= variable < self.var_count:
                raise ValueError(
                    f"clause {clause} refers to a variable outside of 0..{self.var_count - 1}"
                )

    @property
    def clauses(self) -> Tuple[Clause, ...]:
        return tuple(self._clauses)

    def clause_count(self) -> int:
        return len(self._clauses)

    def add_clause(self, first: Literal, second: Literal) -> "TwoSatFormula":
        """
        :return:    A new formula with the clause (first or second) appended
        """
        clause = (first, second)
        self._check_clause(clause)
        formula = TwoSatFormula(self.var_count)
        formula._clauses = self._clauses.append(clause)
        return formula

    def add_unit(self, literal: Literal) -> "TwoSatFormula":
        return self.add_clause(literal, literal)

    def add_implication(self, premise: Literal, conclusion: Literal) -> "TwoSatFormula":
        """
        :return:    A new formula that additionally requires premise => conclusion
        """
        return self.add_clause(negate(premise), conclusion)

    def add_equality(self, x: int, y: int) -> "TwoSatFormula":
        """
        :return:    A new formula that additionally requires variables x and y to take the same value
        """
        return self.add_implication((x, True), (y, True)).add_implication((y, True), (x, True))

    def is_satisfied_by(self, values: Sequence[bool]) -> bool:
        """
        :param values:  A truth value per variable
        :return:        Whether every clause has a true literal under the given values
        """
        return all(
            any(values[variable] == polarity for variable, polarity in clause)
            for clause in self._clauses
        )

    def implication_graph(self) -> nx.DiGraph:
        """
        :return:    The implication graph on nodes 0..2*var_count-1
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(range(2 * self.var_count))
        for first, second in self._clauses:
            graph.add_edge(literal_node(negate(first)), literal_node(second))
            graph.add_edge(literal_node(negate(second)), literal_node(first))
        return graph

    def __str__(self) -> str:
        def show(literal: Literal) -> str:
            return ("x%d" if literal[1] else "~x%d") % literal[0]

        body = " & ".join("(%s | %s)" % (show(a), show(b)) for a, b in self._clauses)
        return "TwoSatFormula(%d vars: %s)" % (self.var_count, body or "true")

    def __repr__(self) -> str:
        return str(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TwoSatFormula):
            return self.var_count == other.var_count and self._clauses == other._clauses
        return False

    def __hash__(self) -> int:
        return hash((self.var_count, self._clauses))


@dataclass(frozen=True)
class Assignment:
    """
    A truth value for every variable of a formula
    """

    values: Tuple[bool, ...]

    def __getitem__(self, variable: int) -> bool:
        return self.values[variable]

    def __len__(self) -> int:
        return len(self.values)

    def true_variables(self) -> Tuple[int, ...]:
        return tuple(v for v, value in enumerate(self.values) if value)


@validate_types
def solve(formula: TwoSatFormula) -> Optional[Assignment]:
    """
    Decide the formula in linear time via the strongly connected components of its implication graph.

    The components are put in topological order, breaking ties by the smallest literal node they contain, and a
    variable is set to true iff the component of its positive literal comes after the component of its negative
    literal. Variables that occur in no clause end up false.

    :param formula: The formula to solve
    :return:        A satisfying assignment, or None if the formula is unsatisfiable
    """
    condensed = nx.condensation(formula.implication_graph())
    component_of = condensed.graph["mapping"]
    for variable in range(formula.var_count):
        if component_of[2 * variable] == component_of[2 * variable + 1]:
            logging.debug(f"2-SAT: variable {variable} is forced both ways, formula is UNSAT")
            return None

    order = nx.lexicographical_topological_sort(
        condensed, key=lambda component: min(condensed.nodes[component]["members"])
    )
    position = {component: index for index, component in enumerate(order)}
    values = tuple(
        position[component_of[2 * variable]] > position[component_of[2 * variable + 1]]
        for variable in range(formula.var_count)
    )
    return Assignment(values)


@validate_types
def count_models_bruteforce(
    formula: TwoSatFormula, max_variables: int = MAX_BRUTEFORCE_VARIABLES
) -> Result[int]:
    """
    Count the satisfying assignments of the formula by trying all of them. Only meant as a test oracle.

    :param formula:         The formula
    :param max_variables:   Refuse formulas with more variables than this
    :return:                A result containing the number of models
    """
    if formula.var_count > max_variables:
        return error(
            f"cannot brute force {formula.var_count} variables (limit is {max_variables})"
        )
    return ok(
        sum(
            1
            for values in product((False, True), repeat=formula.var_count)
            if formula.is_satisfied_by(values)
        )
    )


def to_dimacs(formula: TwoSatFormula) -> str:
    """
    Render the formula in DIMACS CNF. Variable v is written as v + 1 and unit clauses are written with a single
    literal.

    :param formula: The formula
    :return:        The DIMACS text, ending in a newline
    """

    def show(literal: Literal) -> str:
        return str(literal[0] + 1) if literal[1] else str(-(literal[0] + 1))

    lines = [f"p cnf {formula.var_count} {formula.clause_count()}"]
    for first, second in formula.clauses:
        if first == second:
            lines.append(f"{show(first)} 0")
        else:
            lines.append(f"{show(first)} {show(second)} 0")
    return "\n".join(lines) + "\n"
