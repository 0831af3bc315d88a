# pylint: skip-file
from typing import Tuple

from Common.generators import cycle, octahedron
from Common.graph import DistanceMatrix, Graph, all_pairs_distances
from Common.twosat import TwoSatFormula, count_models_bruteforce, solve
from Common.vertex_set import VertexSet
from Separation.formula import (
    TC_PREREQUISITE_ERROR,
    build_formula,
    implies_a,
    implies_b,
    s_set,
    s_sets,
)
from Separation.shadow import ShadowClosedPair, make_pair


def octahedron_pair() -> Tuple[Graph, DistanceMatrix, ShadowClosedPair]:
    g = octahedron()
    d = all_pairs_distances(g).assert_value()
    return g, d, make_pair(g, d, VertexSet.of([0, 4]), VertexSet.of([1, 3])).assert_value()


def test_s_set() -> None:
    g, d, pair = octahedron_pair()
    assert s_set(g, d, pair, 2, 0, 1).assert_value() == VertexSet.of([2])
    assert s_set(g, d, pair, 5, 4, 3).assert_value() == VertexSet.of([5])
    assert s_sets(g, d, pair) == {2: VertexSet.of([2]), 5: VertexSet.of([5])}

    r = s_set(g, d, pair, 0, 0, 1)
    assert r.is_error()
    assert r.error() == "vertex 0 is not in the residue VertexSet({2, 5})"
    r = s_set(g, d, pair, 2, 0, 3)
    assert r.is_error()
    assert r.error() == "(0, 3) is not an edge from A=VertexSet({0, 4}) to B=VertexSet({1, 3})"


def test_implications() -> None:
    g, d, pair = octahedron_pair()
    assert implies_a(g, d, pair, 2, 2)
    assert not implies_a(g, d, pair, 2, 5)
    assert not implies_b(g, d, pair, 2, 5)
    assert not implies_a(g, d, pair, 5, 2)


def test_every_residue_vertex_implies_its_s_set() -> None:
    g, d, pair = octahedron_pair()
    for x, members in s_sets(g, d, pair).items():
        for x0 in members:
            assert implies_a(g, d, pair, x, x0)
            assert implies_b(g, d, pair, x, x0)


def test_build_formula() -> None:
    g, d, pair = octahedron_pair()
    pair_formula = build_formula(g, d, pair).assert_value()
    assert pair_formula.variables == (2, 5)
    assert pair_formula.s_sets == (VertexSet.of([2]), VertexSet.of([5]))
    # I(2, 5) is everything, so it meets both sides: exactly one of 2 and 5 joins A
    assert pair_formula.formula == TwoSatFormula(2, [((0, False), (1, False)), ((0, True), (1, True))])
    assert count_models_bruteforce(pair_formula.formula).assert_value() == 2
    assignment = solve(pair_formula.formula)
    assert assignment is not None
    assert [pair_formula.vertex_of(v) for v in assignment.true_variables()] == [5]
    assert pair_formula.variable_of(5) == 1


def test_build_formula_without_residue() -> None:
    g = cycle(4).assert_value()
    d = all_pairs_distances(g).assert_value()
    pair = make_pair(g, d, VertexSet.of([0, 3]), VertexSet.of([1, 2])).assert_value()
    pair_formula = build_formula(g, d, pair).assert_value()
    assert pair_formula.formula == TwoSatFormula(0)
    assert pair_formula.variables == ()
    assert solve(pair_formula.formula) is not None


def test_build_formula_needs_nonempty_s_sets() -> None:
    g = cycle(5).assert_value()
    d = all_pairs_distances(g).assert_value()
    pair = make_pair(g, d, VertexSet.of([0, 4]), VertexSet.of([1, 2])).assert_value()
    assert pair.residue == VertexSet.of([3])
    r = build_formula(g, d, pair)
    assert r.is_error()
    assert r.error() == f"{TC_PREREQUISITE_ERROR}: S_x is empty for residue vertex 3"
