"""
Structural properties the separation pipeline relies on, as checks that can be run on live data. The pipeline calls
them on every pair and every halfspace it produces when 'IS_INVARIANT_CHECKING' is set, and turns a failed check
into an AssertionError.
"""
from Common.graph import DistanceMatrix, Graph, induces_connected
from Common.result import Result, error, ok
from Common.validation import validate_types
from Common.vertex_set import VertexSet
from Separation.formula import s_set
from Separation.shadow import ShadowClosedPair


@validate_types
def check_equidistance(g: Graph, d: DistanceMatrix, pair: ShadowClosedPair) -> Result[None]:
    """
    Every residue vertex is equally far from both ends of every A-B edge.
    """
    for x in pair.residue:
        for a, b in pair.ab_edges:
            if d.dist(x, a) != d.dist(x, b):
                return error(
                    f"residue vertex {x} is at distance {d.dist(x, a)} from {a} but {d.dist(x, b)} from {b}"
                )
    return ok(None)


@validate_types
def check_nonempty_s_sets(g: Graph, d: DistanceMatrix, pair: ShadowClosedPair) -> Result[None]:
    """
    S_x^ab is nonempty for every residue vertex x and every A-B edge ab. Only guaranteed on graphs satisfying the
    triangle condition.
    """
    for x in pair.residue:
        for a, b in pair.ab_edges:
            if s_set(g, d, pair, x, a, b).assert_value().is_empty():
                return error(
                    f"S_x^ab is empty for residue vertex {x} and A-B edge ({a}, {b}) of pair A={pair.a}, B={pair.b}"
                )
    return ok(None)


@validate_types
def check_connected_sides(g: Graph, halfspace: VertexSet) -> Result[None]:
    """
    A halfspace and its complement both induce connected subgraphs.
    """
    for name, side in (("H", halfspace), ("V - H", halfspace.complement(g.n))):
        if not induces_connected(g, side):
            return error(f"{name}={side} does not induce a connected subgraph")
    return ok(None)


def assert_ok(check: Result[None]) -> None:
    """
    Raise an AssertionError carrying the message of a failed check
    """
    if check.is_error():
        raise AssertionError(check.error())
