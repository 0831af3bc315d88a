"""
The reduction of a shadow-closed pair to 2-SAT.

Every residue vertex x gets a variable a_x that is true iff x joins the A side. The formula is the conjunction of

* equality constraints: for residue x, y, z with S_x and S_y sharing a vertex x0 and z in I(x, y), a_x0 = a_z;
* implication constraints: x ->_A y forces a_x => a_y and x ->_B y forces a_y => a_x;
* pair constraints: if I(x, y) meets B then not both of x, y join A, and if it meets A then at least one does.

Here S_x is the union over the A-B edges ab of S_x^ab, the residue vertices adjacent to both a and b that lie on a
shortest path from x to a and on one from x to b, and x ->_A y holds when y lies on a shortest path from x to some
vertex of A.
"""
from dataclasses import dataclass
from typing import Dict, Set, Tuple

from Common.graph import DistanceMatrix, Graph
from Common.result import Result, error, ok
from Common.twosat import TwoSatFormula
from Common.validation import validate_types
from Common.vertex_set import VertexSet, iter_bits
from Separation.shadow import ShadowClosedPair

TC_PREREQUISITE_ERROR = "TC prerequisite failed"


@dataclass(frozen=True)
class PairFormula:
    """
    The formula of a shadow-closed pair. Variable i stands for the i-th smallest residue vertex.
    """

    formula: TwoSatFormula
    variables: Tuple[int, ...]
    s_sets: Tuple[VertexSet, ...]

    def variable_of(self, vertex: int) -> int:
        return self.variables.index(vertex)

    def vertex_of(self, variable: int) -> int:
        return self.variables[variable]


@validate_types
def s_set(
    g: Graph, d: DistanceMatrix, pair: ShadowClosedPair, x: int, a: int, b: int
) -> Result[VertexSet]:
    """
    Compute S_x^ab.

    :param g:       The graph
    :param d:       Its distance matrix
    :param pair:    A shadow-closed pair
    :param x:       A residue vertex
    :param a:       A vertex of A
    :param b:       A vertex of B adjacent to a
    :return:        A result containing the residue vertices x0 adjacent to a and b with x0 in I(x, a) and I(x, b)
    """
    if x not in pair.residue:
        return error(f"vertex {x} is not in the residue {pair.residue}")
    if (a, b) not in pair.ab_edges:
        return error(f"({a}, {b}) is not an edge from A={pair.a} to B={pair.b}")
    return ok(VertexSet(_s_set_mask(g, d, pair, x, a, b)))


def _s_set_mask(
    g: Graph, d: DistanceMatrix, pair: ShadowClosedPair, x: int, a: int, b: int
) -> int:
    return (
        pair.residue.mask
        & g.neighbor_mask(a)
        & g.neighbor_mask(b)
        & d.interval_mask(x, a)
        & d.interval_mask(x, b)
    )


def s_sets(g: Graph, d: DistanceMatrix, pair: ShadowClosedPair) -> Dict[int, VertexSet]:
    """
    :return:    S_x for every residue vertex x, the union of S_x^ab over the A-B edges ab
    """
    result = {}
    for x in pair.residue:
        mask = 0
        for a, b in pair.ab_edges:
            mask |= _s_set_mask(g, d, pair, x, a, b)
        result[x] = VertexSet(mask)
    return result


def _reach_mask(d: DistanceMatrix, x: int, side: VertexSet) -> int:
    """
    The vertices y with y in I(x, z) for some z on the given side
    """
    mask = 0
    for z in side:
        mask |= d.interval_mask(x, z)
    return mask


@validate_types
def implies_a(g: Graph, d: DistanceMatrix, pair: ShadowClosedPair, x: int, y: int) -> bool:
    """
    :return:    Whether x A-implies y, i.e. some z in A has y in I(x, z)
    """
    return y in VertexSet(_reach_mask(d, x, pair.a))


@validate_types
def implies_b(g: Graph, d: DistanceMatrix, pair: ShadowClosedPair, x: int, y: int) -> bool:
    """
    :return:    Whether x B-implies y, i.e. some z in B has y in I(x, z)
    """
    return y in VertexSet(_reach_mask(d, x, pair.b))


@validate_types
def build_formula(g: Graph, d: DistanceMatrix, pair: ShadowClosedPair) -> Result[PairFormula]:
    """
    Build the 2-SAT formula of a shadow-closed pair. Clauses are emitted in the order equality, implication, pair
    constraints. Equalities are emitted once per pair of variables and self-implications are skipped.

    :param g:       The graph
    :param d:       Its distance matrix
    :param pair:    A shadow-closed pair
    :return:        A result containing the formula, or an error starting with TC_PREREQUISITE_ERROR if some
                    residue vertex has an empty S_x (which cannot happen on graphs with the triangle condition)
    """
    variables = pair.residue.members()
    index = {vertex: i for i, vertex in enumerate(variables)}
    sets = s_sets(g, d, pair)
    for x in variables:
        if sets[x].is_empty():
            return error(f"{TC_PREREQUISITE_ERROR}: S_x is empty for residue vertex {x}")

    formula = TwoSatFormula(len(variables))
    equalities: Set[Tuple[int, int]] = set()
    for i, x in enumerate(variables):
        for y in variables[i:]:
            shared = sets[x].mask & sets[y].mask
            if not shared:
                continue
            for z in iter_bits(d.interval_mask(x, y) & pair.residue.mask):
                for x0 in iter_bits(shared):
                    key = (min(index[x0], index[z]), max(index[x0], index[z]))
                    if key[0] != key[1] and key not in equalities:
                        equalities.add(key)
                        formula = formula.add_equality(*key)

    for x in variables:
        reach_a = _reach_mask(d, x, pair.a)
        reach_b = _reach_mask(d, x, pair.b)
        for y in variables:
            if y == x:
                continue
            if reach_a >> y & 1:
                formula = formula.add_implication((index[x], True), (index[y], True))
            if reach_b >> y & 1:
                formula = formula.add_implication((index[y], True), (index[x], True))

    for i, x in enumerate(variables):
        for y in variables[i + 1 :]:
            between = d.interval_mask(x, y)
            if between & pair.b.mask:
                formula = formula.add_clause((index[x], False), (index[y], False))
            if between & pair.a.mask:
                formula = formula.add_clause((index[x], True), (index[y], True))

    return ok(PairFormula(formula, variables, tuple(sets[x] for x in variables)))
