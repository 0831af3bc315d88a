# pylint: skip-file
from Common.generators import complete_bipartite, cycle, octahedron
from Common.graph import all_pairs_distances
from Common.vertex_set import VertexSet
from Separation.enumeration import enumerate_bruteforce
from Separation.oracle import (
    OracleMismatch,
    OracleReport,
    oracle_answer,
    oracle_check,
    separating_halfspaces,
    small_sets,
)


def test_small_sets() -> None:
    assert small_sets(3, 2) == [
        VertexSet.of([0]),
        VertexSet.of([1]),
        VertexSet.of([2]),
        VertexSet.of([0, 1]),
        VertexSet.of([0, 2]),
        VertexSet.of([1, 2]),
    ]
    assert small_sets(2, 0) == []


def test_separating_halfspaces() -> None:
    g = cycle(4).assert_value()
    d = all_pairs_distances(g).assert_value()
    halfspaces = enumerate_bruteforce(g, d).assert_value()
    assert separating_halfspaces(halfspaces, VertexSet.of([0]), VertexSet.of([2])) == [
        VertexSet.of([0, 1]),
        VertexSet.of([0, 3]),
    ]
    assert oracle_answer(halfspaces, VertexSet.of([0]), VertexSet.of([2])) == "YES"
    assert oracle_answer(halfspaces, VertexSet.of([0, 2]), VertexSet.of([1])) == "NO"
    assert oracle_answer(halfspaces, VertexSet(), VertexSet.of([1])) == "YES"


def test_oracle_check() -> None:
    g = cycle(4).assert_value()
    d = all_pairs_distances(g).assert_value()
    report = oracle_check(g, d).assert_value()
    # 12 pairs of singletons, 12 + 12 mixed pairs and 6 pairs of 2-sets
    assert report == OracleReport(True, 42, 0, ())
    assert report.passed()
    assert report.summary() == {"certified": True, "instances": 42, "unknown": 0, "mismatches": []}

    for graph in (octahedron(), complete_bipartite(2, 3).assert_value()):
        d = all_pairs_distances(graph).assert_value()
        assert oracle_check(graph, d).assert_value().passed()


def test_oracle_check_limit() -> None:
    g = cycle(4).assert_value()
    d = all_pairs_distances(g).assert_value()
    r = oracle_check(g, d, max_vertices=3)
    assert r.is_error()
    assert r.error() == "cannot brute force the halfspaces of 4 vertices (limit is 3)"


def test_uncertified_graph_tallies_unknown() -> None:
    g = cycle(5).assert_value()
    d = all_pairs_distances(g).assert_value()
    report = oracle_check(g, d, max_ab=1).assert_value()
    assert not report.certified
    assert report.instances == 20
    assert report.unknown > 0


def test_mismatch_summary() -> None:
    mismatch = OracleMismatch(VertexSet.of([0]), VertexSet.of([2]), "YES", "NO")
    assert mismatch.summary() == {"a": [0], "b": [2], "expected": "YES", "actual": "NO"}
