"""
Membership checks for the metric graph classes on which halfspace separation is decided exactly, together with the
local conditions they are defined by. Every checker scans its defining condition by brute force and returns a
ClassReport carrying the first violation in lexicographic order.

Witness shapes, by class:

* triangle_condition, meshed, pseudo_modular: (u, v, w)
* quadrangle_condition: (u, v, w, z)
* pseudo_modular_3helly: (v1, r1, v2, r2, v3, r3), three pairwise intersecting balls with no common vertex
* convex_balls: (v, k, x, y), the ball B_k(v) contains x and y but not all of I(x, y)
* k_simple_descent: (v, a1, ..., aj), a clique on a sphere around v without a common neighbour one step closer
* interval_condition: (u, v), a pair at distance 2 whose interval is not a square, pyramid or octahedron
* positioning_condition: (v1, v2, v3, v4, u), a square and a vertex violating the positioning equality
* composite classes (weakly_modular, bridged, weakly_bridged, matroid_basis_graph) reuse the witness of the
  sub-condition that failed and name it in `reason`. An induced cycle witness lists the cycle in walking order.
"""
from itertools import combinations
from typing import Iterator, List, Optional, Tuple

import networkx as nx  # type: ignore

from Common.graph import (
    DistanceMatrix,
    Graph,
    cycle_order,
    find_induced_cycle,
    induced_subgraph,
    induces_connected,
)
from Common.result import Result, error, ok
from Common.validation import validate_types
from Common.vertex_set import VertexSet, iter_bits, popcount
from Metric.class_report import ClassReport

# Degree sequences (within the interval) of the square, the pyramid and the octahedron
SQUARE_DEGREES = (2, 2, 2, 2)
PYRAMID_DEGREES = (3, 3, 3, 3, 4)
OCTAHEDRON_DEGREES = (4, 4, 4, 4, 4, 4)
INTERVAL_SHAPES = (SQUARE_DEGREES, PYRAMID_DEGREES, OCTAHEDRON_DEGREES)


def _common_neighbors(g: Graph, v: int, w: int) -> int:
    return g.neighbor_mask(v) & g.neighbor_mask(w)


@validate_types
def satisfies_tc(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Triangle condition: for every u and adjacent v, w with d(u, v) = d(u, w) > 1 there is a common neighbour x of
    v and w with d(u, x) = d(u, v) - 1.
    """
    edges = g.sorted_edges()
    for u in range(g.n):
        row = d.row(u)
        for v, w in edges:
            level = row[v]
            if level < 2 or row[w] != level:
                continue
            if not _common_neighbors(g, v, w) & d.sphere_mask(u, level - 1):
                return ClassReport("triangle_condition", False, (u, v, w))
    return ClassReport("triangle_condition", True)


@validate_types
def satisfies_qc(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Quadrangle condition: for every u and v, w, z with z adjacent to both v and w, v and w not adjacent, and
    2 <= d(u, v) = d(u, w) = d(u, z) - 1, there is a common neighbour x of v and w with d(u, x) = d(u, v) - 1.
    """
    for u in range(g.n):
        row = d.row(u)
        for v in range(g.n):
            level = row[v]
            if level < 2:
                continue
            for w in iter_bits(d.sphere_mask(u, level) & ~g.neighbor_mask(v)):
                if w <= v:
                    continue
                common = _common_neighbors(g, v, w)
                above = common & d.sphere_mask(u, level + 1)
                if above and not common & d.sphere_mask(u, level - 1):
                    z = (above & -above).bit_length() - 1
                    return ClassReport("quadrangle_condition", False, (u, v, w, z))
    return ClassReport("quadrangle_condition", True)


@validate_types
def is_weakly_modular(g: Graph, d: DistanceMatrix) -> ClassReport:
    tc = satisfies_tc(g, d)
    if not tc.holds:
        return tc.because("weakly_modular")
    return satisfies_qc(g, d).because("weakly_modular")


def _distance_two_pairs(g: Graph, d: DistanceMatrix) -> Iterator[Tuple[int, int]]:
    for v in range(g.n):
        for w in iter_bits(d.sphere_mask(v, 2)):
            if w > v:
                yield v, w


@validate_types
def is_meshed(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Weak quadrangle condition: for every u and every v, w with d(v, w) = 2 there is a common neighbour x of v and w
    with 2 d(u, x) <= d(u, v) + d(u, w).
    """
    pairs = list(_distance_two_pairs(g, d))
    for u in range(g.n):
        row = d.row(u)
        for v, w in pairs:
            bound = row[v] + row[w]
            if not any(2 * row[x] <= bound for x in iter_bits(_common_neighbors(g, v, w))):
                return ClassReport("meshed", False, (u, v, w))
    return ClassReport("meshed", True)


@validate_types
def is_pseudo_modular_metric(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    For every u, v, w with 1 <= d(v, w) <= 2 and d(u, v) = d(u, w) = k >= 2 there is a common neighbour x of v and w
    with d(u, x) = k - 1.
    """
    for u in range(g.n):
        row = d.row(u)
        for v in range(g.n):
            level = row[v]
            if level < 2:
                continue
            closer = d.sphere_mask(u, level - 1)
            for w in iter_bits(d.sphere_mask(u, level)):
                if w <= v or d.dist(v, w) > 2:
                    continue
                if not _common_neighbors(g, v, w) & closer:
                    return ClassReport("pseudo_modular", False, (u, v, w))
    return ClassReport("pseudo_modular", True)


@validate_types
def is_pseudo_modular_3helly(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Any three pairwise intersecting balls have a common vertex. Two balls B_r(u) and B_s(v) meet iff
    d(u, v) <= r + s. Balls with r >= ecc(v) are all of V and are skipped, as are triples repeating a ball.
    """
    balls = [
        (v, radius, d.ball_mask(v, radius))
        for v in range(g.n)
        for radius in range(d.eccentricity(v))
    ]

    def meet(first: Tuple[int, int, int], second: Tuple[int, int, int]) -> bool:
        return d.dist(first[0], second[0]) <= first[1] + second[1]

    for i, first in enumerate(balls):
        for j in range(i + 1, len(balls)):
            second = balls[j]
            if not meet(first, second):
                continue
            both = first[2] & second[2]
            for third in balls[j + 1 :]:
                if meet(first, third) and meet(second, third) and not both & third[2]:
                    return ClassReport(
                        "pseudo_modular_3helly",
                        False,
                        (first[0], first[1], second[0], second[1], third[0], third[1]),
                    )
    return ClassReport("pseudo_modular_3helly", True)


def _induced_cycle_report(
    g: Graph, length: int, class_name: str
) -> Optional[ClassReport]:
    found = find_induced_cycle(g, length).assert_value()
    if found is None:
        return None
    return ClassReport(class_name, False, found, f"induced C{length}")  # type: ignore


@validate_types
def is_bridged(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Bridged graphs are the weakly modular graphs without induced C4 or C5.
    """
    modular = is_weakly_modular(g, d)
    if not modular.holds:
        return modular.because("bridged")
    for length in (4, 5):
        report = _induced_cycle_report(g, length, "bridged")
        if report is not None:
            return report
    return ClassReport("bridged", True)


@validate_types
def is_weakly_bridged(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Weakly bridged graphs are the weakly modular graphs without induced C4.
    """
    modular = is_weakly_modular(g, d)
    if not modular.holds:
        return modular.because("weakly_bridged")
    report = _induced_cycle_report(g, 4, "weakly_bridged")
    if report is not None:
        return report
    return ClassReport("weakly_bridged", True)


@validate_types
def has_convex_balls(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Every ball B_k(v) is convex. Radius 0 balls and balls covering V are convex, so only 1 <= k < ecc(v) is checked.
    """
    for v in range(g.n):
        for radius in range(1, d.eccentricity(v)):
            mask = d.ball_mask(v, radius)
            members = list(iter_bits(mask))
            for i, x in enumerate(members):
                for y in members[i + 1 :]:
                    if d.interval_mask(x, y) & ~mask:
                        return ClassReport("convex_balls", False, (v, radius, x, y))
    return ClassReport("convex_balls", True)


def _cliques_within(g: Graph, candidates: int, max_size: int) -> Iterator[Tuple[int, ...]]:
    """
    Yield every nonempty clique of at most max_size vertices inside the candidate mask, in lexicographic order
    """

    def extend(clique: Tuple[int, ...], allowed: int) -> Iterator[Tuple[int, ...]]:
        for vertex in iter_bits(allowed):
            grown = clique + (vertex,)
            yield grown
            if len(grown) < max_size:
                later = allowed & g.neighbor_mask(vertex) & ~((2 << vertex) - 1)
                yield from extend(grown, later)

    yield from extend((), candidates)


@validate_types
def satisfies_k_sd(g: Graph, d: DistanceMatrix, k: int) -> Result[ClassReport]:
    """
    Simple descent for cliques of at most k vertices: for every v, every i >= 1 and every clique A of at most k
    vertices on the sphere S_{i+1}(v) there is a vertex of S_i(v) adjacent to all of A. Radii stop at ecc(v).

    :param g:   The graph
    :param d:   Its distance matrix
    :param k:   The clique size bound, at least 1
    :return:    A result containing the report, or an error if k < 1
    """
    if k < 1:
        return error(f"simple descent needs a clique bound of at least 1, got {k}")
    for v in range(g.n):
        for radius in range(1, d.eccentricity(v)):
            closer = d.sphere_mask(v, radius)
            for clique in _cliques_within(g, d.sphere_mask(v, radius + 1), k):
                common = closer
                for member in clique:
                    common &= g.neighbor_mask(member)
                if not common:
                    return ok(
                        ClassReport("k_simple_descent", False, (v,) + clique, parameter=k)
                    )
    return ok(ClassReport("k_simple_descent", True, parameter=k))


def clique_number(g: Graph) -> int:
    """
    :return:    The size of a largest clique of g
    """
    return max(len(clique) for clique in nx.find_cliques(g.to_networkx()))


def _interval_shape(g: Graph, mask: int) -> Tuple[int, ...]:
    fragment = induced_subgraph(g, VertexSet(mask)).assert_value()
    return tuple(sorted(fragment.degree(i) for i in range(fragment.vertex_count())))


@validate_types
def satisfies_ic(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Interval condition: every interval I(u, v) with d(u, v) = 2 induces a square, a pyramid or an octahedron.
    These are told apart by the sorted degree sequence inside the interval, which determines each of them up to
    isomorphism at its size.
    """
    for u, v in _distance_two_pairs(g, d):
        if _interval_shape(g, d.interval_mask(u, v)) not in INTERVAL_SHAPES:
            return ClassReport("interval_condition", False, (u, v))
    return ClassReport("interval_condition", True)


@validate_types
def squares(g: Graph) -> List[Tuple[int, int, int, int]]:
    """
    :param g:   The graph
    :return:    Every induced 4-cycle once, starting at its smallest vertex and continuing to its smaller
                neighbour, in lexicographic order
    """
    found = []
    for subset in combinations(range(g.n), 4):
        mask = 0
        for vertex in subset:
            mask |= 1 << vertex
        if all(popcount(g.neighbor_mask(v) & mask) == 2 for v in subset):
            found.append(cycle_order(g, subset))
    return sorted(found)  # type: ignore


@validate_types
def satisfies_pc(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    Positioning condition: for every square v1 v2 v3 v4 and every vertex u,
    d(u, v1) + d(u, v3) = d(u, v2) + d(u, v4).
    """
    for v1, v2, v3, v4 in squares(g):
        for u in range(g.n):
            row = d.row(u)
            if row[v1] + row[v3] != row[v2] + row[v4]:
                return ClassReport("positioning_condition", False, (v1, v2, v3, v4, u))
    return ClassReport("positioning_condition", True)


@validate_types
def is_matroid_basis_graph_candidate(g: Graph, d: DistanceMatrix) -> ClassReport:
    """
    A connected graph satisfying the interval and positioning conditions. The link condition is implied by these
    two and is not checked.
    """
    if not induces_connected(g, g.all_vertices()):
        return ClassReport("matroid_basis_graph", False, (0,), "disconnected")
    interval_report = satisfies_ic(g, d)
    if not interval_report.holds:
        return interval_report.because("matroid_basis_graph")
    return satisfies_pc(g, d).because("matroid_basis_graph")


@validate_types
def classify(g: Graph, d: DistanceMatrix) -> List[ClassReport]:
    """
    Run every checker. Simple descent is checked up to the clique number of g.

    :param g:   The graph
    :param d:   Its distance matrix
    :return:    One report per graph class in a fixed order
    """
    return [
        satisfies_tc(g, d),
        satisfies_qc(g, d),
        is_weakly_modular(g, d),
        is_meshed(g, d),
        is_pseudo_modular_metric(g, d),
        is_pseudo_modular_3helly(g, d),
        is_bridged(g, d),
        is_weakly_bridged(g, d),
        has_convex_balls(g, d),
        satisfies_k_sd(g, d, clique_number(g)).assert_value(),
        satisfies_ic(g, d),
        satisfies_pc(g, d),
        is_matroid_basis_graph_candidate(g, d),
    ]


@validate_types
def certify(g: Graph, d: DistanceMatrix) -> Optional[ClassReport]:
    """
    Find a class on which the separation pipeline is complete.

    :param g:   The graph
    :param d:   Its distance matrix
    :return:    The first passing report among weakly bridged, pseudo-modular and matroid basis graph, or None
    """
    for checker in (is_weakly_bridged, is_pseudo_modular_metric, is_matroid_basis_graph_candidate):
        report = checker(g, d)
        if report.holds:
            return report
    return None
