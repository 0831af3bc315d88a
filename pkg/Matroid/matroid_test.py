# pylint: skip-file
from itertools import combinations
from typing import Any, List, Sequence

import networkx as nx  # type: ignore
import pytest
from hypothesis import given, settings  # type: ignore
from hypothesis.strategies import data, permutations, sampled_from  # type: ignore

from Common.generators import atlas_connected, complete, cycle, path
from Common.graph import Graph, all_pairs_distances
from Matroid.matroid import (
    EXCHANGE_PROPERTY_ERROR,
    ExchangeCheck,
    Matroid,
    basis_graph,
    graphic_matroid,
    make_matroid,
    uniform_matroid,
    validate_exchange_property,
)
from Metric.graph_classes import is_matroid_basis_graph_candidate, is_meshed, satisfies_ic, satisfies_pc


def test_matroid_constructor() -> None:
    with pytest.raises(ValueError):
        Matroid(0, 1, ((0,),))
    with pytest.raises(ValueError):
        Matroid(3, 4, ((0, 1, 2, 3),))
    with pytest.raises(ValueError):
        Matroid(3, 2, ())
    with pytest.raises(ValueError):
        Matroid(3, 2, ((0,),))
    with pytest.raises(ValueError):
        Matroid(3, 2, ((1, 0),))
    with pytest.raises(ValueError):
        Matroid(3, 2, ((0, 3),))
    with pytest.raises(ValueError):
        Matroid(3, 2, ((0, 2), (0, 1)))
    with pytest.raises(ValueError):
        Matroid(3, 2, ((0, 1), (0, 1)))

    m = Matroid(3, 2, ((0, 1), (0, 2)))
    assert m.basis_count() == 2
    assert m.is_basis([2, 0])
    assert not m.is_basis([1, 2])


def test_exchange_property() -> None:
    check = validate_exchange_property(Matroid(4, 2, ((0, 1), (2, 3))))
    assert not check.holds
    assert check.witness == ((0, 1), (2, 3), 0)
    assert check.describe() == (
        "exchange property violated: A=[0, 1], B=[2, 3], i=0: no element of B - A can replace 0 in A"
    )
    assert validate_exchange_property(uniform_matroid(2, 4).assert_value()).holds
    assert ExchangeCheck(True).describe() == "exchange property holds"
    with pytest.raises(ValueError):
        ExchangeCheck(True, ((0,), (1,), 0))
    with pytest.raises(ValueError):
        ExchangeCheck(False)


def test_make_matroid() -> None:
    m = make_matroid(3, 2, [[2, 1], [0, 1], [0, 2]]).assert_value()
    assert m.bases == ((0, 1), (0, 2), (1, 2))

    r = make_matroid(4, 2, [[0, 1], [2, 3]])
    assert r.is_error()
    assert r.error().startswith(EXCHANGE_PROPERTY_ERROR)

    r = make_matroid(3, 2, [[0, 1], [1, 0]])
    assert r.is_error()
    assert r.error() == "duplicate basis [0, 1]"

    r = make_matroid(3, 2, [[0, 0]])
    assert r.is_error()
    assert r.error() == "basis [0, 0] repeats an element"

    r = make_matroid(3, 2, [[0, 1, 2]])
    assert r.is_error()
    assert r.error() == "basis [0, 1, 2] has 3 elements, expected 2"

    r = make_matroid(3, 2, [[0, 5]])
    assert r.is_error()
    assert r.error() == "basis (0, 5) has an element outside of 0..2"

    assert make_matroid(17, 1, [[0]]).is_error()
    assert make_matroid(3, 1, [[0], [1], [2]], max_bases=2).is_error()


def test_uniform_matroid() -> None:
    m = uniform_matroid(2, 4).assert_value()
    assert m.bases == tuple(combinations(range(4), 2))
    assert uniform_matroid(1, 1).assert_value().bases == ((0,),)
    r = uniform_matroid(3, 2)
    assert r.is_error()
    assert r.error() == "uniform matroid needs 1 <= r <= n, got r=3, n=2"


def test_basis_graph() -> None:
    g = basis_graph(uniform_matroid(2, 4).assert_value()).assert_value()
    # Bases 01, 02, 03, 12, 13, 23: complementary pairs are the only non-adjacent ones
    assert g.n == 6
    assert g.edge_count() == 12
    assert not g.adjacent(0, 5)
    assert not g.adjacent(1, 4)
    assert not g.adjacent(2, 3)

    assert basis_graph(uniform_matroid(1, 3).assert_value()).assert_value() == complete(3).assert_value()

    r = basis_graph(Matroid(4, 2, ((0, 1), (2, 3))))
    assert r.is_error()
    assert r.error().startswith("basis graph is invalid, the input is not a matroid")


def test_graphic_matroid() -> None:
    m = graphic_matroid(cycle(3).assert_value()).assert_value()
    assert (m.ground_size, m.rank) == (3, 2)
    assert m.bases == ((0, 1), (0, 2), (1, 2))

    m = graphic_matroid(complete(4).assert_value()).assert_value()
    assert (m.ground_size, m.rank, m.basis_count()) == (6, 3, 16)

    # A tree has exactly one spanning tree
    m = graphic_matroid(path(4).assert_value()).assert_value()
    assert m.bases == ((0, 1, 2),)

    assert graphic_matroid(complete(9).assert_value()).is_error()
    assert graphic_matroid(Graph(1, [])).is_error()
    r = graphic_matroid(complete(5).assert_value(), max_bases=100)
    assert r.is_error()
    assert r.error() == "more than 100 spanning trees"


def test_basis_graphs_pass_candidate_check() -> None:
    for m in [
        uniform_matroid(2, 4).assert_value(),
        uniform_matroid(2, 5).assert_value(),
        uniform_matroid(3, 5).assert_value(),
        graphic_matroid(complete(4).assert_value()).assert_value(),
        graphic_matroid(cycle(4).assert_value()).assert_value(),
    ]:
        g = basis_graph(m).assert_value()
        d = all_pairs_distances(g).assert_value()
        assert is_matroid_basis_graph_candidate(g, d).holds


def test_uniform_basis_graph_structure() -> None:
    g = basis_graph(uniform_matroid(2, 4).assert_value()).assert_value()
    d = all_pairs_distances(g).assert_value()
    assert all(len(g.neighbors(v)) == 4 for v in range(g.n))
    assert satisfies_ic(g, d).holds
    assert satisfies_pc(g, d).holds
    assert is_meshed(g, d).holds


def generated_matroids() -> List[Matroid]:
    uniform = [
        uniform_matroid(rank, ground_size).assert_value()
        for ground_size in range(1, 6)
        for rank in range(1, ground_size + 1)
    ]
    graphic = [graphic_matroid(g).assert_value() for g in atlas_connected(4) if g.edge_count() > 0]
    return uniform + graphic


@pytest.mark.parametrize("m", generated_matroids())  # type: ignore
def test_generated_basis_graphs_are_meshed(m: Matroid) -> None:
    g = basis_graph(m).assert_value()
    d = all_pairs_distances(g).assert_value()
    assert is_meshed(g, d).holds
    assert is_matroid_basis_graph_candidate(g, d).holds


def relabel(m: Matroid, permutation: Sequence[int]) -> Matroid:
    bases = sorted(tuple(sorted(permutation[e] for e in basis)) for basis in m.bases)
    return Matroid(m.ground_size, m.rank, tuple(bases))


RELABEL_CASES = [
    uniform_matroid(2, 4).assert_value(),
    uniform_matroid(3, 5).assert_value(),
    graphic_matroid(complete(4).assert_value()).assert_value(),
    graphic_matroid(cycle(4).assert_value()).assert_value(),
    Matroid(4, 2, ((0, 1), (2, 3))),
    Matroid(5, 2, ((0, 1), (0, 2), (1, 2), (3, 4))),
]


@settings(deadline=None, max_examples=50)  # type: ignore
@given(data())  # type: ignore
def test_relabelling_the_ground_set(drawn: Any) -> None:
    m = drawn.draw(sampled_from(RELABEL_CASES))
    permutation = drawn.draw(permutations(range(m.ground_size)))
    relabelled = relabel(m, permutation)

    assert validate_exchange_property(relabelled).holds == validate_exchange_property(m).holds
    graph_r = basis_graph(m)
    relabelled_r = basis_graph(relabelled)
    assert graph_r.is_ok() == relabelled_r.is_ok()
    if graph_r.is_ok():
        assert nx.is_isomorphic(graph_r.value().to_networkx(), relabelled_r.value().to_networkx())
