"""
Closed-form graph families and the fixed graph corpus the acceptance tests run on. Nothing here is random: every
generator is a pure function of its parameters.
"""
from itertools import combinations
from typing import List, Sequence, Tuple

import networkx as nx  # type: ignore

from Common.graph import Graph, make_graph
from Common.result import Result, error, ok
from Common.validation import validate_types
from Matroid.matroid import basis_graph, graphic_matroid, uniform_matroid

# The largest graphs in the networkx atlas have 7 vertices
MAX_ATLAS_VERTICES = 7

# Chordal samples for the corpus. Vertex k + 1 is attached to the clique listed at position k.
CHORDAL_FAN = ((0,), (0, 1), (0, 2), (0, 3))
CHORDAL_STRIP = ((0,), (0, 1), (1, 2), (2, 3), (3, 4))
CHORDAL_TREE = ((0,), (0,), (1,), (1, 3), (2,), (0, 2))


@validate_types
def path(n: int) -> Result[Graph]:
    """
    :return:    A result containing the path 0 - 1 - ... - (n-1)
    """
    if n < 1:
        return error(f"a path needs at least 1 vertex, got {n}")
    return make_graph(n, [(v, v + 1) for v in range(n - 1)])


@validate_types
def cycle(n: int) -> Result[Graph]:
    """
    :return:    A result containing the cycle 0 - 1 - ... - (n-1) - 0
    """
    if n < 3:
        return error(f"a cycle needs at least 3 vertices, got {n}")
    return make_graph(n, [(v, (v + 1) % n) for v in range(n)])


@validate_types
def complete(n: int) -> Result[Graph]:
    if n < 1:
        return error(f"a complete graph needs at least 1 vertex, got {n}")
    return make_graph(n, list(combinations(range(n), 2)))


@validate_types
def star(leaves: int) -> Result[Graph]:
    """
    :return:    A result containing the star with center 0 and the given number of leaves
    """
    if leaves < 1:
        return error(f"a star needs at least 1 leaf, got {leaves}")
    return make_graph(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


@validate_types
def hypercube(dim: int) -> Result[Graph]:
    """
    :return:    A result containing Q_dim, whose vertices are bit strings joined when they differ in one bit
    """
    if dim < 1:
        return error(f"a hypercube needs dimension at least 1, got {dim}")
    n = 1 << dim
    return make_graph(n, [(v, v ^ (1 << bit)) for v in range(n) for bit in range(dim) if v < v ^ (1 << bit)])


@validate_types
def complete_bipartite(left: int, right: int) -> Result[Graph]:
    """
    :return:    A result containing K_{left,right} with sides 0..left-1 and left..left+right-1
    """
    if left < 1 or right < 1:
        return error(f"both sides of a complete bipartite graph must be nonempty, got {left} and {right}")
    return make_graph(
        left + right, [(u, left + v) for u in range(left) for v in range(right)]
    )


def octahedron() -> Graph:
    """
    :return:    K_{2,2,2} on 0..5 with the antipodal (non-adjacent) pairs (0,3), (1,4) and (2,5)
    """
    return make_graph(
        6, [(u, v) for u, v in combinations(range(6), 2) if v - u != 3]
    ).assert_value()


@validate_types
def simplicial_growth(attachments: Sequence[Sequence[int]]) -> Result[Graph]:
    """
    Grow a chordal graph from the single vertex 0. The k-th attachment lists the earlier vertices that vertex k + 1
    is joined to, and must be a nonempty clique, so every added vertex is simplicial when added.

    :param attachments: One nonempty clique of earlier vertices per added vertex
    :return:            A result containing the grown graph
    """
    edges: List[Tuple[int, int]] = []
    present = set()
    for offset, clique in enumerate(attachments):
        vertex = offset + 1
        if not clique:
            return error(f"vertex {vertex} must be attached to at least one earlier vertex")
        if any(not 0 <= u < vertex for u in clique):
            return error(f"vertex {vertex} can only attach to vertices 0..{vertex - 1}, got {list(clique)}")
        for u, v in combinations(sorted(set(clique)), 2):
            if (u, v) not in present:
                return error(f"attachment {list(clique)} of vertex {vertex} is not a clique")
        for u in sorted(set(clique)):
            edges.append((u, vertex))
            present.add((u, vertex))
    return make_graph(len(attachments) + 1, edges)


@validate_types
def atlas_connected(max_n: int) -> List[Graph]:
    """
    Every connected graph on 1..max_n vertices, one per isomorphism class, in the order of the networkx graph
    atlas (by vertex count, then edge count).

    :param max_n:   At most MAX_ATLAS_VERTICES
    :return:        The graphs
    """
    if not 1 <= max_n <= MAX_ATLAS_VERTICES:
        raise ValueError(f"the graph atlas covers 1..{MAX_ATLAS_VERTICES} vertices, got {max_n}")
    graphs = []
    for atlas_graph in nx.graph_atlas_g():
        n = atlas_graph.number_of_nodes()
        if n == 0 or n > max_n or not nx.is_connected(atlas_graph):
            continue
        graphs.append(Graph(n, atlas_graph.edges()))
    return graphs


def corpus() -> List[Tuple[str, Graph]]:
    """
    The named graphs every acceptance suite runs on: small complete graphs, paths and cycles, the octahedron and
    the 3-cube, three matroid basis graphs and three chordal graphs grown by simplicial attachment.

    :return:    (name, graph) pairs in a fixed order
    """
    named = [
        ("K3", complete(3)),
        ("K4", complete(4)),
        ("P3", path(3)),
        ("P4", path(4)),
        ("P5", path(5)),
        ("P6", path(6)),
        ("C4", cycle(4)),
        ("octahedron", ok(octahedron())),
        ("Q3", hypercube(3)),
        ("basis-U(2,4)", basis_graph(uniform_matroid(2, 4).assert_value())),
        ("basis-U(2,5)", basis_graph(uniform_matroid(2, 5).assert_value())),
        (
            "basis-graphic-K4",
            basis_graph(graphic_matroid(complete(4).assert_value()).assert_value()),
        ),
        ("chordal-fan", simplicial_growth(CHORDAL_FAN)),
        ("chordal-strip", simplicial_growth(CHORDAL_STRIP)),
        ("chordal-tree", simplicial_growth(CHORDAL_TREE)),
    ]
    return [(name, graph_r.assert_value()) for name, graph_r in named]
