# pylint: skip-file
import pytest

from Common.generators import (
    CHORDAL_FAN,
    CHORDAL_TREE,
    atlas_connected,
    complete,
    complete_bipartite,
    corpus,
    cycle,
    hypercube,
    octahedron,
    path,
    simplicial_growth,
    star,
)
from Common.graph import all_pairs_distances, find_induced_cycle


def test_families() -> None:
    assert path(3).assert_value().sorted_edges() == [(0, 1), (1, 2)]
    assert path(1).assert_value().edge_count() == 0
    assert path(0).is_error()

    assert cycle(4).assert_value().sorted_edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]
    r = cycle(2)
    assert r.is_error()
    assert r.error() == "a cycle needs at least 3 vertices, got 2"

    assert complete(4).assert_value().edge_count() == 6
    assert complete(0).is_error()
    assert star(3).assert_value().neighbors(0) == (1, 2, 3)
    assert star(0).is_error()

    q3 = hypercube(3).assert_value()
    assert q3.n == 8
    assert q3.edge_count() == 12
    assert all_pairs_distances(q3).assert_value().dist(0, 7) == 3
    assert hypercube(0).is_error()

    k23 = complete_bipartite(2, 3).assert_value()
    assert k23.n == 5
    assert k23.edge_count() == 6
    assert not k23.adjacent(0, 1)
    assert k23.adjacent(1, 4)
    assert complete_bipartite(0, 3).is_error()


def test_octahedron() -> None:
    g = octahedron()
    assert g.n == 6
    assert g.edge_count() == 12
    assert not g.adjacent(0, 3)
    assert not g.adjacent(1, 4)
    assert not g.adjacent(2, 5)
    assert g.adjacent(0, 1)
    assert all(len(g.neighbors(v)) == 4 for v in range(6))


def test_simplicial_growth() -> None:
    fan = simplicial_growth(CHORDAL_FAN).assert_value()
    assert fan.n == 5
    assert fan.neighbors(0) == (1, 2, 3, 4)
    assert fan.sorted_edges() == [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4)]
    for length in (4, 5):
        assert find_induced_cycle(simplicial_growth(CHORDAL_TREE).assert_value(), length).assert_value() is None

    r = simplicial_growth([(0,), (0, 1), (1, 2), (0, 3)])
    assert r.is_error()
    assert r.error() == "attachment [0, 3] of vertex 4 is not a clique"
    r = simplicial_growth([(0,), ()])
    assert r.is_error()
    assert r.error() == "vertex 2 must be attached to at least one earlier vertex"
    r = simplicial_growth([(1,)])
    assert r.is_error()
    assert r.error() == "vertex 1 can only attach to vertices 0..0, got [1]"
    assert simplicial_growth([]).assert_value().n == 1


def test_atlas_connected() -> None:
    assert len(atlas_connected(1)) == 1
    assert len(atlas_connected(4)) == 10
    assert len(atlas_connected(5)) == 31
    for g in atlas_connected(5):
        assert all_pairs_distances(g).is_ok()
    with pytest.raises(ValueError):
        atlas_connected(0)
    with pytest.raises(ValueError):
        atlas_connected(8)


def test_corpus() -> None:
    named = dict(corpus())
    assert list(named) == [
        "K3",
        "K4",
        "P3",
        "P4",
        "P5",
        "P6",
        "C4",
        "octahedron",
        "Q3",
        "basis-U(2,4)",
        "basis-U(2,5)",
        "basis-graphic-K4",
        "chordal-fan",
        "chordal-strip",
        "chordal-tree",
    ]
    assert named["octahedron"] == octahedron()
    assert named["basis-U(2,4)"].n == 6
    assert named["basis-U(2,5)"].n == 10
    assert named["basis-graphic-K4"].n == 16
    assert named["chordal-tree"].n == 7
