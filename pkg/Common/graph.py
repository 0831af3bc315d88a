"""
A module containing the immutable graph representation and the distance based queries every other module is built
on: all-pairs distances, geodesic intervals, balls, spheres, shortest connecting paths, induced subgraphs and small
induced cycle detection.

A Graph is never changed after construction. Its adjacency is stored in pyrsistent structures so that it can be
shared freely between the class checkers, the separation pipeline and the enumerator. The DistanceMatrix is
computed once per graph (via networkx BFS) and threaded through every operation; nothing here recomputes distances
behind the caller's back.

Vertex tie-breaking everywhere is lexicographic on vertex id.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx  # type: ignore
import numpy as np
from pyrsistent import pmap, pset, pvector

from Common.constants import INDUCED_CYCLE_LENGTHS
from Common.geo_types import Edge
from Common.result import Result, error, ok
from Common.validation import validate_types
from Common.vertex_set import VertexSet, iter_bits, popcount

NOT_CONNECTED_ERROR = "graph is not connected"
EMPTY_SET_ERROR = "vertex set must be nonempty"


class Graph:
    """
    Represents a simple undirected graph on the dense vertex ids 0..n-1. The constructor enforces simplicity
    (no self-loops, no duplicate edges, ids in range) and raises a ValueError otherwise. Connectivity is enforced
    by `make_graph`, which every loader goes through; the algorithms in this codebase assume a connected graph.

    Each vertex carries a label (by default its decimal id) so that graphs loaded from files with arbitrary vertex
    names can be reported in terms of those names.
    """

    n: int

    def __init__(
        self, n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None
    ) -> None:
        if not isinstance(n, int) or n < 1:
            raise ValueError("a Graph must have at least one vertex!")
        normalized = set()
        for edge in edges:
            u, v = edge
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {edge} has an endpoint outside of 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop on vertex {u}")
            key = (min(u, v), max(u, v))
            if key in normalized:
                raise ValueError(f"duplicate edge {key}")
            normalized.add(key)
        if labels is None:
            labels = [str(v) for v in range(n)]
        if len(labels) != n:
            raise ValueError(f"expected {n} labels but got {len(labels)}")
        if len(set(labels)) != n:
            raise ValueError("vertex labels must be distinct")

        self.n = n
        self._edges = pset(normalized)
        self._labels = pvector(labels)
        self._label_index = pmap({label: v for v, label in enumerate(labels)})
        neighbors: List[List[int]] = [[] for _ in range(n)]
        for u, v in normalized:
            neighbors[u].append(v)
            neighbors[v].append(u)
        self._adjacency = pvector(tuple(sorted(nbrs)) for nbrs in neighbors)
        self._neighbor_masks = tuple(VertexSet.of(nbrs).mask for nbrs in self._adjacency)

    @property
    def edges(self) -> FrozenSet[Edge]:
        """
        :return:    The edges of this graph, each as (smaller endpoint, larger endpoint)
        """
        return frozenset(self._edges)

    @property
    def labels(self) -> Tuple[str, ...]:
        """
        :return:    The labels of the vertices, indexed by vertex id
        """
        return tuple(self._labels)

    def sorted_edges(self) -> List[Edge]:
        """
        :return:    The edges of this graph in lexicographic order
        """
        return sorted(self._edges)

    def edge_count(self) -> int:
        return len(self._edges)

    def neighbors(self, vertex: int) -> Tuple[int, ...]:
        """
        :param vertex:  A vertex of this graph
        :return:        The neighbours of the vertex in increasing order
        """
        return self._adjacency[vertex]

    def neighbor_mask(self, vertex: int) -> int:
        """
        :param vertex:  A vertex of this graph
        :return:        The open neighbourhood N(vertex) as a bitmask
        """
        return self._neighbor_masks[vertex]

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._neighbor_masks[u] >> v & 1)

    def label_of(self, vertex: int) -> str:
        return self._labels[vertex]

    def vertex_of(self, label: str) -> Optional[int]:
        """
        :param label:   A vertex label
        :return:        The id of the vertex with that label, or None if there is no such vertex
        """
        return self._label_index.get(label, None)

    def has_identity_labels(self) -> bool:
        """
        :return:    Whether every vertex is labelled by its own decimal id
        """
        return all(label == str(v) for v, label in enumerate(self._labels))

    def contains_set(self, vertices: VertexSet) -> bool:
        """
        :param vertices:    A vertex set
        :return:            Whether every member of the set is a vertex of this graph
        """
        return vertices.mask >> self.n == 0

    def all_vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def to_networkx(self) -> nx.Graph:
        """
        :return:    A networkx copy of this graph on nodes 0..n-1
        """
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.sorted_edges())
        return graph

    def __str__(self) -> str:
        return "Graph(n=%s, edges=%s)" % (self.n, self.sorted_edges())

    def __repr__(self) -> str:
        return str(self)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Graph):
            return self.n == other.n and self._edges == other._edges
        return False

    def __hash__(self) -> int:
        return hash((self.n, self._edges))


class DistanceMatrix:
    """
    Holds the all-pairs hop distances of a connected graph together with the bitmasks derived from them: the
    geodesic interval I(u, v) for every pair and the sphere S_k(v) for every vertex and radius. All of these are
    computed once at construction; every interval, ball and sphere query afterwards is a table lookup.
    """

    n: int
    matrix: np.ndarray

    def __init__(self, matrix: np.ndarray) -> None:
        matrix = np.array(matrix, dtype=np.int64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] < 1:
            raise ValueError("a DistanceMatrix must be a non-empty square table")
        if (np.diag(matrix) != 0).any() or (matrix != matrix.T).any():
            raise ValueError("a DistanceMatrix must be symmetric with a zero diagonal")
        off_diagonal = matrix + np.eye(matrix.shape[0], dtype=np.int64)
        if (off_diagonal < 1).any():
            raise ValueError("distinct vertices must be at distance at least 1")
        matrix.setflags(write=False)

        self.n = matrix.shape[0]
        self.matrix = matrix
        self._rows = tuple(tuple(int(x) for x in row) for row in matrix)
        self._eccentricities = tuple(int(x) for x in matrix.max(axis=1))
        self._intervals = tuple(self._interval_masks_from(u) for u in range(self.n))
        self._spheres = tuple(
            tuple(
                _mask_of(np.flatnonzero(matrix[v] == k))
                for k in range(self._eccentricities[v] + 1)
            )
            for v in range(self.n)
        )

    def _interval_masks_from(self, u: int) -> Tuple[int, ...]:
        """
        :param u:   A vertex
        :return:    The bitmask of I(u, v) for every vertex v
        """
        # on_path[v, x] holds iff d(u, x) + d(x, v) == d(u, v)
        on_path = (self.matrix[u][None, :] + self.matrix) == self.matrix[u][:, None]
        return tuple(_mask_of(np.flatnonzero(on_path[v])) for v in range(self.n))

    def dist(self, u: int, v: int) -> int:
        return self._rows[u][v]

    def row(self, u: int) -> Tuple[int, ...]:
        """
        :param u:   A vertex
        :return:    The distances from u to every vertex, indexed by vertex id
        """
        return self._rows[u]

    def eccentricity(self, vertex: int) -> int:
        return self._eccentricities[vertex]

    def diameter(self) -> int:
        return max(self._eccentricities)

    def interval_mask(self, u: int, v: int) -> int:
        return self._intervals[u][v]

    def sphere_mask(self, vertex: int, radius: int) -> int:
        if radius < 0 or radius > self._eccentricities[vertex]:
            return 0
        return self._spheres[vertex][radius]

    def ball_mask(self, vertex: int, radius: int) -> int:
        if radius < 0:
            return 0
        mask = 0
        for sphere in self._spheres[vertex][: radius + 1]:
            mask |= sphere
        return mask

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DistanceMatrix):
            return bool(np.array_equal(self.matrix, other.matrix))
        return False

    def __hash__(self) -> int:
        return hash(self._rows)


@dataclass(frozen=True)
class GraphFragment:
    """
    An induced subgraph of a Graph. Unlike Graph it may be disconnected. Vertex i of the fragment is the i-th
    smallest member of the inducing set; `vertices` maps fragment ids back to graph ids.
    """

    vertices: Tuple[int, ...]
    edges: FrozenSet[Edge]

    def vertex_count(self) -> int:
        return len(self.vertices)

    def degree(self, local_vertex: int) -> int:
        return sum(1 for edge in self.edges if local_vertex in edge)


def _mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for index in indices:
        mask |= 1 << int(index)
    return mask


def _check_vertex(g: Graph, vertex: int) -> None:
    if not isinstance(vertex, int) or not 0 <= vertex < g.n:
        raise ValueError(f"vertex {vertex!r} is not a vertex of a graph with {g.n} vertices")


@validate_types
def make_graph(
    n: int, edges: Sequence[Tuple[int, int]], labels: Optional[Sequence[str]] = None
) -> Result[Graph]:
    """
    Build a Graph and verify that it is simple and connected.

    :param n:       The number of vertices
    :param edges:   The edges as pairs of vertex ids
    :param labels:  Optional vertex labels (defaults to the decimal ids)
    :return:        A result containing the graph, or an error describing the first violation. Disconnected
                    graphs produce an error starting with NOT_CONNECTED_ERROR.
    """
    try:
        graph = Graph(n, edges, labels)
    except ValueError as exc:
        return error(str(exc))
    reached = nx.node_connected_component(graph.to_networkx(), 0)
    if len(reached) != n:
        missing = min(set(range(n)) - reached)
        return error(f"{NOT_CONNECTED_ERROR}: vertex {missing} is unreachable from vertex 0")
    return ok(graph)


@validate_types
def all_pairs_distances(g: Graph) -> Result[DistanceMatrix]:
    """
    Compute all-pairs hop distances with one breadth-first search per vertex.

    :param g:   The graph
    :return:    A result containing the distance matrix, or an error starting with NOT_CONNECTED_ERROR if some pair
                of vertices is not connected
    """
    matrix = np.zeros((g.n, g.n), dtype=np.int64)
    for source, lengths in nx.all_pairs_shortest_path_length(g.to_networkx()):
        if len(lengths) != g.n:
            missing = min(set(range(g.n)) - set(lengths))
            return error(
                f"{NOT_CONNECTED_ERROR}: no path between vertex {source} and vertex {missing}"
            )
        for target, length in lengths.items():
            matrix[source, target] = length
    return ok(DistanceMatrix(matrix))


@validate_types
def interval(g: Graph, d: DistanceMatrix, u: int, v: int) -> VertexSet:
    """
    The geodesic interval I(u, v): every vertex on some shortest u-v path, i.e. every x with
    d(u, x) + d(x, v) = d(u, v).

    :param g:   The graph
    :param d:   Its distance matrix
    :param u:   A vertex
    :param v:   A vertex
    :return:    I(u, v), which always contains u and v
    """
    _check_vertex(g, u)
    _check_vertex(g, v)
    return VertexSet(d.interval_mask(u, v))


@validate_types
def ball(g: Graph, d: DistanceMatrix, v: int, k: int) -> VertexSet:
    """
    :return:    B_k(v) = {x : d(x, v) <= k}
    """
    _check_vertex(g, v)
    if k < 0:
        raise ValueError(f"ball radius must be non-negative, got {k}")
    return VertexSet(d.ball_mask(v, k))


@validate_types
def sphere(g: Graph, d: DistanceMatrix, v: int, k: int) -> VertexSet:
    """
    :return:    S_k(v) = {x : d(x, v) = k}
    """
    _check_vertex(g, v)
    if k < 0:
        raise ValueError(f"sphere radius must be non-negative, got {k}")
    return VertexSet(d.sphere_mask(v, k))


@validate_types
def ball_of_set(g: Graph, d: DistanceMatrix, x: VertexSet, k: int) -> Result[VertexSet]:
    """
    B_k(X): every vertex within distance k of some member of X.

    :param g:   The graph
    :param d:   Its distance matrix
    :param x:   A nonempty vertex set
    :param k:   A non-negative radius
    :return:    A result containing the union of the balls of radius k around the members of X
    """
    if x.is_empty():
        return error(f"{EMPTY_SET_ERROR}: cannot take a ball around the empty set")
    if not g.contains_set(x):
        return error(f"{x} is not a subset of the vertices of {g}")
    if k < 0:
        return error(f"ball radius must be non-negative, got {k}")
    mask = 0
    for member in x:
        mask |= d.ball_mask(member, k)
    return ok(VertexSet(mask))


def closed_neighbourhood(g: Graph, x: VertexSet) -> VertexSet:
    """
    :return:    N[X], the members of X together with all of their neighbours
    """
    mask = x.mask
    for member in x:
        mask |= g.neighbor_mask(member)
    return VertexSet(mask)


@validate_types
def set_distance(g: Graph, d: DistanceMatrix, a: VertexSet, b: VertexSet) -> Result[int]:
    """
    :return:    A result containing d(A, B), the minimum distance between a member of A and a member of B
    """
    if a.is_empty() or b.is_empty():
        return error(f"{EMPTY_SET_ERROR}: the distance between sets needs two nonempty sets")
    return ok(min(d.dist(u, v) for u in a for v in b))


def distance_to_set(d: DistanceMatrix, vertex: int, target: VertexSet) -> int:
    """
    :return:    The distance from the vertex to the closest member of the (nonempty) target set
    """
    row = d.row(vertex)
    return min(row[t] for t in target)


@validate_types
def shortest_connecting_path(
    g: Graph, d: DistanceMatrix, a: VertexSet, b: VertexSet
) -> Result[List[int]]:
    """
    Compute the lexicographically smallest shortest path from A to B. The path starts at the smallest vertex of A
    closest to B and then repeatedly steps to the smallest neighbour one step closer to B. Every greedy choice
    extends to a shortest path, so the result is the lexicographic minimum over all shortest A-B paths.

    :param g:   The graph
    :param d:   Its distance matrix
    :param a:   A nonempty vertex set
    :param b:   A nonempty vertex set disjoint from A
    :return:    A result containing u_1..u_k with u_1 in A, u_k in B and k - 1 = d(A, B)
    """
    if a.is_empty() or b.is_empty():
        return error(f"{EMPTY_SET_ERROR}: a connecting path needs two nonempty sets")
    if not a.isdisjoint(b):
        return error(f"cannot connect overlapping sets {a} and {b}")
    gap = set_distance(g, d, a, b).assert_value()
    current = min(v for v in a if distance_to_set(d, v, b) == gap)
    path = [current]
    for remaining in range(gap - 1, -1, -1):
        current = min(
            w for w in g.neighbors(current) if distance_to_set(d, w, b) == remaining
        )
        path.append(current)
    return ok(path)


@validate_types
def induced_subgraph(g: Graph, s: VertexSet) -> Result[GraphFragment]:
    """
    :param g:   The graph
    :param s:   A nonempty vertex set
    :return:    A result containing the subgraph induced by S with its vertices relabelled 0..|S|-1 in increasing
                order of their ids in g
    """
    if s.is_empty():
        return error(f"{EMPTY_SET_ERROR}: cannot induce a subgraph on the empty set")
    if not g.contains_set(s):
        return error(f"{s} is not a subset of the vertices of {g}")
    vertices = s.members()
    local = {v: i for i, v in enumerate(vertices)}
    edges = frozenset(
        (local[u], local[v]) for u, v in g.sorted_edges() if u in local and v in local
    )
    return ok(GraphFragment(vertices, edges))


def induces_connected(g: Graph, s: VertexSet) -> bool:
    """
    Whether S induces a connected subgraph. The empty set counts as connected. Runs a bitmask search instead of
    building a fragment since the separation pipeline calls this on every produced halfspace.

    :param g:   The graph
    :param s:   A vertex set
    :return:    Whether the subgraph induced by S is connected
    """
    if s.is_empty():
        return True
    seen = 1 << s.first()
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= g.neighbor_mask(v)
        frontier = reach & s.mask & ~seen
        seen |= frontier
    return seen == s.mask


def cycle_order(g: Graph, vertices: Tuple[int, ...]) -> Tuple[int, ...]:
    """
    Walk a chordless cycle starting at its smallest vertex, going to its smaller neighbour first

    :param g:           The graph
    :param vertices:    The vertices of an induced cycle in increasing order
    :return:            The same vertices in cycle order
    """
    members = VertexSet.of(vertices).mask
    order = [vertices[0]]
    previous = -1
    current = vertices[0]
    while len(order) < len(vertices):
        options = [w for w in iter_bits(g.neighbor_mask(current) & members) if w != previous]
        previous, current = current, min(options)
        order.append(current)
    return tuple(order)


@validate_types
def find_induced_cycle(g: Graph, length: int) -> Result[Optional[Tuple[int, ...]]]:
    """
    Find the first vertex subset (in lexicographic order) of the given size that induces a chordless cycle.
    On 4 or 5 vertices a subgraph is a cycle exactly when it is 2-regular, so only degrees are checked.

    :param g:       The graph
    :param length:  4 or 5
    :return:        A result containing the cycle in walking order, None if there is no such cycle, or an error
                    for an unsupported length
    """
    if length not in INDUCED_CYCLE_LENGTHS:
        return error(
            f"unsupported induced cycle length {length} (supported: {INDUCED_CYCLE_LENGTHS})"
        )
    for subset in combinations(range(g.n), length):
        mask = VertexSet.of(subset).mask
        if all(popcount(g.neighbor_mask(v) & mask) == 2 for v in subset):
            return ok(cycle_order(g, subset))
    return ok(None)


@validate_types
def has_induced_cycle(g: Graph, length: int) -> Result[bool]:
    """
    :return:    A result containing whether g has an induced cycle of the given length (4 or 5)
    """
    return find_induced_cycle(g, length).map(lambda cycle: cycle is not None)


def is_clique(g: Graph, s: VertexSet) -> bool:
    """
    :return:    Whether all members of S are pairwise adjacent (vacuously true for at most one member)
    """
    for v in s:
        if (s.mask & ~(1 << v)) & ~g.neighbor_mask(v):
            return False
    return True
