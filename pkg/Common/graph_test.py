# pylint: skip-file
from typing import Any, Tuple

import networkx as nx  # type: ignore
import numpy as np
import pytest
from hypothesis import given, settings  # type: ignore
from hypothesis.strategies import data, integers, sampled_from  # type: ignore

from Common.generators import atlas_connected, complete, cycle, octahedron, path
from Common.graph import (
    EMPTY_SET_ERROR,
    NOT_CONNECTED_ERROR,
    DistanceMatrix,
    Graph,
    all_pairs_distances,
    ball,
    ball_of_set,
    closed_neighbourhood,
    find_induced_cycle,
    has_induced_cycle,
    induced_subgraph,
    induces_connected,
    interval,
    is_clique,
    make_graph,
    set_distance,
    shortest_connecting_path,
    sphere,
)
from Common.vertex_set import VertexSet


def with_distances(g: Graph) -> Tuple[Graph, DistanceMatrix]:
    return g, all_pairs_distances(g).assert_value()


def test_graph_constructor() -> None:
    with pytest.raises(ValueError):
        Graph(0, [])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1)], ["a"])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1)], ["a", "a"])

    g = Graph(3, [(2, 1), (0, 1)])
    assert g.sorted_edges() == [(0, 1), (1, 2)]
    assert g.edges == frozenset({(0, 1), (1, 2)})
    assert g.edge_count() == 2
    assert g.neighbors(1) == (0, 2)
    assert g.neighbor_mask(1) == 0b101
    assert g.adjacent(0, 1) and g.adjacent(1, 0)
    assert not g.adjacent(0, 2)
    assert g == Graph(3, [(0, 1), (1, 2)])
    assert hash(g) == hash(Graph(3, [(0, 1), (1, 2)]))
    assert g != Graph(3, [(0, 1), (0, 2)])
    assert g != "graph"
    assert str(g) == repr(g) == "Graph(n=3, edges=[(0, 1), (1, 2)])"


def test_labels() -> None:
    g = Graph(3, [(0, 1), (1, 2)], ["a", "b", "c"])
    assert g.labels == ("a", "b", "c")
    assert g.label_of(2) == "c"
    assert g.vertex_of("b") == 1
    assert g.vertex_of("z") is None
    assert not g.has_identity_labels()
    assert Graph(2, [(0, 1)]).has_identity_labels()
    assert Graph(2, [(0, 1)]).vertex_of("1") == 1


def test_make_graph_errors() -> None:
    r = make_graph(3, [(0, 1)])
    assert r.is_error()
    assert r.error() == f"{NOT_CONNECTED_ERROR}: vertex 2 is unreachable from vertex 0"

    r = make_graph(2, [(0, 0)])
    assert r.is_error()
    assert r.error() == "self-loop on vertex 0"

    r = make_graph(2, [(0, 1), (1, 0)])
    assert r.is_error()
    assert r.error() == "duplicate edge (0, 1)"

    r = make_graph(2, [(0, 5)])
    assert r.is_error()
    assert r.error() == "edge (0, 5) has an endpoint outside of 0..1"

    assert make_graph(1, []).is_ok()


def test_all_pairs_distances() -> None:
    r = all_pairs_distances(Graph(3, [(0, 1)]))
    assert r.is_error()
    assert r.error().startswith(NOT_CONNECTED_ERROR)

    g, d = with_distances(cycle(6).assert_value())
    assert d.dist(0, 3) == 3
    assert d.dist(1, 5) == 2
    assert d.row(0) == (0, 1, 2, 3, 2, 1)
    assert d.eccentricity(4) == 3
    assert d.diameter() == 3
    assert d == all_pairs_distances(cycle(6).assert_value()).assert_value()
    assert hash(d) == hash(all_pairs_distances(cycle(6).assert_value()).assert_value())
    assert d != all_pairs_distances(path(6).assert_value()).assert_value()
    with pytest.raises(ValueError):
        d.matrix[0, 1] = 7


def test_distance_matrix_validation() -> None:
    with pytest.raises(ValueError):
        DistanceMatrix(np.zeros((2, 3), dtype=np.int64))
    with pytest.raises(ValueError):
        DistanceMatrix(np.array([[0, 1], [2, 0]]))
    with pytest.raises(ValueError):
        DistanceMatrix(np.array([[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        DistanceMatrix(np.array([[0, 0], [0, 0]]))
    assert DistanceMatrix(np.array([[0, 1], [1, 0]])).dist(0, 1) == 1


@given(integers(1, 12))  # type: ignore
def test_path_distances(n: int) -> None:
    g, d = with_distances(path(n).assert_value())
    for u in range(n):
        for v in range(n):
            assert d.dist(u, v) == abs(u - v)
            assert interval(g, d, u, v) == VertexSet.of(range(min(u, v), max(u, v) + 1))


def test_interval_ball_sphere() -> None:
    g, d = with_distances(cycle(4).assert_value())
    assert interval(g, d, 0, 2) == VertexSet.of([0, 1, 2, 3])
    assert interval(g, d, 0, 1) == VertexSet.of([0, 1])
    assert interval(g, d, 3, 3) == VertexSet.of([3])
    with pytest.raises(ValueError):
        interval(g, d, 0, 4)

    g, d = with_distances(path(4).assert_value())
    assert ball(g, d, 1, 0) == VertexSet.of([1])
    assert ball(g, d, 1, 1) == VertexSet.of([0, 1, 2])
    assert ball(g, d, 1, 10) == VertexSet.of([0, 1, 2, 3])
    assert sphere(g, d, 0, 2) == VertexSet.of([2])
    assert sphere(g, d, 0, 5) == VertexSet()
    with pytest.raises(ValueError):
        ball(g, d, 0, -1)
    with pytest.raises(ValueError):
        sphere(g, d, -1, 1)


def test_ball_of_set_and_neighbourhood() -> None:
    g, d = with_distances(path(5).assert_value())
    assert ball_of_set(g, d, VertexSet.of([0, 4]), 0).assert_value() == VertexSet.of([0, 4])
    assert ball_of_set(g, d, VertexSet.of([0, 4]), 1).assert_value() == VertexSet.of([0, 1, 3, 4])
    r = ball_of_set(g, d, VertexSet(), 1)
    assert r.is_error()
    assert r.error().startswith(EMPTY_SET_ERROR)
    assert ball_of_set(g, d, VertexSet.of([0]), -1).is_error()
    assert ball_of_set(g, d, VertexSet.of([9]), 1).is_error()

    assert closed_neighbourhood(g, VertexSet.of([2])) == VertexSet.of([1, 2, 3])
    assert closed_neighbourhood(g, VertexSet()) == VertexSet()


def test_set_distance_and_paths() -> None:
    g, d = with_distances(path(5).assert_value())
    assert set_distance(g, d, VertexSet.of([0]), VertexSet.of([4])).assert_value() == 4
    assert set_distance(g, d, VertexSet.of([0, 3]), VertexSet.of([4])).assert_value() == 1
    assert set_distance(g, d, VertexSet(), VertexSet.of([4])).is_error()

    g, d = with_distances(cycle(4).assert_value())
    assert shortest_connecting_path(g, d, VertexSet.of([0]), VertexSet.of([2])).assert_value() == [0, 1, 2]
    assert shortest_connecting_path(g, d, VertexSet.of([2]), VertexSet.of([0])).assert_value() == [2, 1, 0]
    assert shortest_connecting_path(g, d, VertexSet.of([0, 3]), VertexSet.of([1, 2])).assert_value() == [0, 1]

    g, d = with_distances(cycle(6).assert_value())
    assert shortest_connecting_path(g, d, VertexSet.of([0]), VertexSet.of([3])).assert_value() == [0, 1, 2, 3]

    r = shortest_connecting_path(g, d, VertexSet.of([0, 1]), VertexSet.of([1]))
    assert r.is_error()
    assert r.error() == "cannot connect overlapping sets VertexSet({0, 1}) and VertexSet({1})"
    assert shortest_connecting_path(g, d, VertexSet(), VertexSet.of([1])).is_error()


def test_induced_subgraph() -> None:
    g = cycle(4).assert_value()
    fragment = induced_subgraph(g, VertexSet.of([0, 1, 3])).assert_value()
    assert fragment.vertices == (0, 1, 3)
    assert fragment.edges == frozenset({(0, 1), (0, 2)})
    assert fragment.vertex_count() == 3
    assert fragment.degree(0) == 2
    assert fragment.degree(2) == 1
    assert induced_subgraph(g, VertexSet.of([1, 3])).assert_value().edges == frozenset()
    assert induced_subgraph(g, VertexSet()).is_error()
    assert induced_subgraph(g, VertexSet.of([4])).is_error()

    assert induces_connected(g, VertexSet())
    assert induces_connected(g, VertexSet.of([0, 1]))
    assert induces_connected(g, VertexSet.of([3, 0, 1]))
    assert not induces_connected(g, VertexSet.of([0, 2]))


def test_induced_cycles() -> None:
    assert find_induced_cycle(cycle(4).assert_value(), 4).assert_value() == (0, 1, 2, 3)
    assert find_induced_cycle(cycle(5).assert_value(), 5).assert_value() == (0, 1, 2, 3, 4)
    assert find_induced_cycle(cycle(5).assert_value(), 4).assert_value() is None
    assert find_induced_cycle(complete(4).assert_value(), 4).assert_value() is None
    assert find_induced_cycle(octahedron(), 4).assert_value() == (0, 1, 3, 4)
    assert has_induced_cycle(octahedron(), 4).assert_value()
    assert not has_induced_cycle(octahedron(), 5).assert_value()

    r = find_induced_cycle(cycle(6).assert_value(), 6)
    assert r.is_error()
    assert r.error() == "unsupported induced cycle length 6 (supported: (4, 5))"


def test_is_clique() -> None:
    assert is_clique(complete(4).assert_value(), VertexSet.of([0, 1, 2, 3]))
    assert is_clique(cycle(4).assert_value(), VertexSet.of([0, 1]))
    assert not is_clique(cycle(4).assert_value(), VertexSet.of([0, 2]))
    assert is_clique(cycle(4).assert_value(), VertexSet.of([3]))
    assert is_clique(cycle(4).assert_value(), VertexSet())


ATLAS = atlas_connected(6)


@settings(deadline=None, max_examples=200)  # type: ignore
@given(data())  # type: ignore
def test_interval_symmetry_and_nesting(drawn: Any) -> None:
    g, d = with_distances(drawn.draw(sampled_from(ATLAS)))
    u = drawn.draw(integers(0, g.n - 1))
    v = drawn.draw(integers(0, g.n - 1))
    uv = interval(g, d, u, v)
    assert uv == interval(g, d, v, u)
    for w in uv:
        assert interval(g, d, u, w).issubset(uv)


@settings(deadline=None, max_examples=100)  # type: ignore
@given(data())  # type: ignore
def test_balls_are_disjoint_unions_of_spheres(drawn: Any) -> None:
    g, d = with_distances(drawn.draw(sampled_from(ATLAS)))
    v = drawn.draw(integers(0, g.n - 1))
    covered = VertexSet()
    for radius in range(d.eccentricity(v) + 2):
        layer = sphere(g, d, v, radius)
        assert layer.isdisjoint(covered)
        covered = covered | layer
        assert ball(g, d, v, radius) == covered
    assert covered == g.all_vertices()


@pytest.mark.parametrize("g", ATLAS)  # type: ignore
def test_distances_match_single_source_search(g: Graph) -> None:
    d = all_pairs_distances(g).assert_value()
    nx_graph = g.to_networkx()
    for u in range(g.n):
        lengths = nx.single_source_shortest_path_length(nx_graph, u)
        assert d.row(u) == tuple(lengths[v] for v in range(g.n))
