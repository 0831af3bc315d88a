"""
Matroids given as explicit lists of bases, the exchange property validator, basis graphs and the two standard
families used as inputs for the separation pipeline: uniform matroids and graphic matroids.

A basis is identified by its sorted element tuple and the bases of a Matroid are kept in lexicographic order, which
fixes the vertex numbering of the basis graph.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

import networkx as nx  # type: ignore

from Common.constants import MAX_BASES, MAX_GRAPHIC_VERTICES, MAX_GROUND_SIZE
from Common.graph import Graph, make_graph
from Common.result import Result, error, ok
from Common.validation import validate_types

Basis = Tuple[int, ...]

EXCHANGE_PROPERTY_ERROR = "exchange property violated"


@dataclass(frozen=True)
class Matroid:
    """
    Represents a matroid on the ground set 0..ground_size-1 by its bases. The constructor checks the structural
    invariants (sizes, order, no duplicates) but not the exchange property, which is validated separately by
    `validate_exchange_property` (and by `make_matroid`).
    """

    ground_size: int
    rank: int
    bases: Tuple[Basis, ...]

    def __post_init__(self) -> None:
        if self.ground_size < 1:
            raise ValueError("a Matroid must have a nonempty ground set!")
        if not 1 <= self.rank <= self.ground_size:
            raise ValueError(
                f"rank {self.rank} must be between 1 and the ground size {self.ground_size}"
            )
        if not self.bases:
            raise ValueError("a Matroid must have at least one basis!")
        for basis in self.bases:
            if len(basis) != self.rank:
                raise ValueError(f"basis {basis} does not have {self.rank} elements")
            if list(basis) != sorted(set(basis)):
                raise ValueError(f"basis {basis} must list distinct elements in increasing order")
            if basis[0] < 0 or basis[-1] >= self.ground_size:
                raise ValueError(f"basis {basis} has an element outside of 0..{self.ground_size - 1}")
        for earlier, later in zip(self.bases, self.bases[1:]):
            if not earlier < later:
                raise ValueError("bases must be distinct and in lexicographic order")

    def basis_count(self) -> int:
        return len(self.bases)

    def is_basis(self, candidate: Sequence[int]) -> bool:
        return tuple(sorted(candidate)) in set(self.bases)


@dataclass(frozen=True)
class ExchangeCheck:
    """
    The outcome of checking the exchange property. The witness (A, B, i) names two bases A, B and an element i of
    A - B such that no j of B - A makes (A - {i}) + {j} a basis.
    """

    holds: bool
    witness: Optional[Tuple[Basis, Basis, int]] = None

    def __post_init__(self) -> None:
        if self.holds == (self.witness is not None):
            raise ValueError("an ExchangeCheck has a witness iff the exchange property fails")

    def describe(self) -> str:
        if self.witness is None:
            return "exchange property holds"
        first, second, element = self.witness
        return (
            f"{EXCHANGE_PROPERTY_ERROR}: A={list(first)}, B={list(second)}, i={element}: "
            f"no element of B - A can replace {element} in A"
        )


@validate_types
def validate_exchange_property(m: Matroid) -> ExchangeCheck:
    """
    Check that for all bases A, B and every i in A - B there is some j in B - A such that (A - {i}) + {j} is again a
    basis. Bases are scanned in lexicographic order so the witness is the first violation in that order.

    :param m:   The matroid
    :return:    The outcome, with a witness if the property fails
    """
    known = set(m.bases)
    for first in m.bases:
        for second in m.bases:
            missing = sorted(set(second) - set(first))
            for element in sorted(set(first) - set(second)):
                rest = set(first) - {element}
                if not any(tuple(sorted(rest | {other})) in known for other in missing):
                    return ExchangeCheck(False, (first, second, element))
    return ExchangeCheck(True)


@validate_types
def make_matroid(
    ground_size: int,
    rank: int,
    bases: Sequence[Sequence[int]],
    max_ground_size: int = MAX_GROUND_SIZE,
    max_bases: int = MAX_BASES,
) -> Result[Matroid]:
    """
    Build a Matroid from bases given in any order and verify the exchange property.

    :param ground_size:     The size of the ground set
    :param rank:            The common size of every basis
    :param bases:           The bases, each as a collection of ground set elements
    :param max_ground_size: Refuse ground sets larger than this
    :param max_bases:       Refuse more bases than this
    :return:                A result containing the matroid, or an error. Exchange property violations produce
                            an error starting with EXCHANGE_PROPERTY_ERROR that names the witness.
    """
    if ground_size > max_ground_size:
        return error(f"ground set of size {ground_size} exceeds the limit of {max_ground_size}")
    if len(bases) > max_bases:
        return error(f"{len(bases)} bases exceed the limit of {max_bases}")
    normalized: List[Basis] = []
    for basis in bases:
        if len(set(basis)) != len(basis):
            return error(f"basis {list(basis)} repeats an element")
        if len(basis) != rank:
            return error(f"basis {list(basis)} has {len(basis)} elements, expected {rank}")
        normalized.append(tuple(sorted(basis)))
    if len(set(normalized)) != len(normalized):
        duplicate = min(b for b in normalized if normalized.count(b) > 1)
        return error(f"duplicate basis {list(duplicate)}")
    try:
        matroid = Matroid(ground_size, rank, tuple(sorted(normalized)))
    except ValueError as exc:
        return error(str(exc))
    check = validate_exchange_property(matroid)
    if not check.holds:
        return error(check.describe())
    return ok(matroid)


@validate_types
def basis_graph(m: Matroid) -> Result[Graph]:
    """
    The basis graph has one vertex per basis (numbered by position in the basis list) and joins two bases iff they
    differ by a single exchange, i.e. |A - B| = 1.

    :param m:   A matroid satisfying the exchange property
    :return:    A result containing the basis graph, or an error if it is disconnected (which only happens for
                inputs violating the exchange property)
    """
    edges = [
        (i, j)
        for (i, first), (j, second) in combinations(enumerate(m.bases), 2)
        if len(set(first) - set(second)) == 1
    ]
    graph_r = make_graph(m.basis_count(), edges)
    if graph_r.is_error():
        return error(f"basis graph is invalid, the input is not a matroid: {graph_r.error()}")
    return graph_r


@validate_types
def uniform_matroid(rank: int, ground_size: int) -> Result[Matroid]:
    """
    :return:    A result containing U(rank, ground_size), whose bases are all subsets of size rank
    """
    if not 1 <= rank <= ground_size:
        return error(f"uniform matroid needs 1 <= r <= n, got r={rank}, n={ground_size}")
    return make_matroid(ground_size, rank, list(combinations(range(ground_size), rank)))


@validate_types
def graphic_matroid(
    g: Graph, max_vertices: int = MAX_GRAPHIC_VERTICES, max_bases: int = MAX_BASES
) -> Result[Matroid]:
    """
    The cycle matroid of a connected graph: element k is the k-th edge in lexicographic order and the bases are the
    edge sets of the spanning trees.

    :param g:               A connected graph with at least one edge
    :param max_vertices:    Refuse graphs with more vertices than this
    :param max_bases:       Stop once more spanning trees than this have been found
    :return:                A result containing the graphic matroid
    """
    if g.n > max_vertices:
        return error(f"graph with {g.n} vertices exceeds the graphic matroid limit of {max_vertices}")
    if g.edge_count() == 0:
        return error("graphic matroid of a graph without edges has rank 0")
    index_of = {edge: k for k, edge in enumerate(g.sorted_edges())}
    trees: List[Basis] = []
    for tree in nx.SpanningTreeIterator(g.to_networkx()):
        if len(trees) == max_bases:
            return error(f"more than {max_bases} spanning trees")
        trees.append(
            tuple(sorted(index_of[(min(u, v), max(u, v))] for u, v in tree.edges()))
        )
    return make_matroid(g.edge_count(), g.n - 1, trees, max_bases=max_bases)
