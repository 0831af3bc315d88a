"""
Reading and writing the text formats of graphs, matroids and vertex lists.

Graph format: the first line is "n m", followed by m lines "u v", one per edge. Everything after a '#' is a comment
and blank lines are ignored. Vertices are normally the ids 0..n-1; if any token is not such an id, all tokens are
treated as labels and numbered in order of first appearance. The canonical form written by `format_graph` uses ids
and lists edges in lexicographic order.

Matroid format: the first line is "n r", followed by one basis per line as r space separated elements of 0..n-1.
"""
from typing import Dict, List, Sequence, Tuple

from Common.graph import Graph, make_graph
from Common.result import Result, error, ok
from Common.validation import validate_types
from Common.vertex_set import VertexSet
from Matroid.matroid import Matroid, make_matroid


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    """
    :return:    (line number, tokens) for every line with content, comments removed
    """
    lines = []
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if tokens:
            lines.append((number, tokens))
    return lines


def _parse_header(lines: List[Tuple[int, List[str]]], names: str) -> Result[Tuple[int, int]]:
    if not lines:
        return error(f"line 1: expected a header '{names}' but the input is empty")
    number, tokens = lines[0]
    if len(tokens) != 2 or not all(token.isdigit() for token in tokens):
        return error(f"line {number}: expected a header '{names}' of two non-negative integers, got {' '.join(tokens)!r}")
    return ok((int(tokens[0]), int(tokens[1])))


def _all_ids(tokens: Sequence[str], n: int) -> bool:
    return all(token.isdigit() and int(token) < n for token in tokens)


@validate_types
def parse_graph(text: str) -> Result[Graph]:
    """
    :param text:    A graph in the text format
    :return:        A result containing the graph with its labels, or an error naming the offending line
    """
    lines = _content_lines(text)
    header_r = _parse_header(lines, "n m")
    if header_r.is_error():
        return error(header_r.error())
    n, m = header_r.value()
    if n < 1:
        return error(f"line {lines[0][0]}: a graph needs at least one vertex")
    edge_lines = lines[1:]
    if len(edge_lines) != m:
        return error(f"line {lines[0][0]}: header announces {m} edges but {len(edge_lines)} edge lines follow")
    for number, tokens in edge_lines:
        if len(tokens) != 2:
            return error(f"line {number}: expected an edge 'u v', got {' '.join(tokens)!r}")

    tokens = [token for _, pair in edge_lines for token in pair]
    labels: List[str]
    if _all_ids(tokens, n):
        labels = [str(v) for v in range(n)]
        index: Dict[str, int] = {label: v for v, label in enumerate(labels)}
    else:
        index = {}
        for token in tokens:
            index.setdefault(token, len(index))
        if len(index) != n:
            return error(f"line {lines[0][0]}: header announces {n} vertices but the edges name {len(index)}")
        labels = list(index)

    edges: List[Tuple[int, int]] = []
    seen = set()
    for number, (first, second) in edge_lines:
        u, v = index[first], index[second]
        if u == v:
            return error(f"line {number}: self-loop on vertex {first}")
        key = (min(u, v), max(u, v))
        if key in seen:
            return error(f"line {number}: duplicate edge {first} {second}")
        seen.add(key)
        edges.append(key)
    return make_graph(n, edges, labels)


@validate_types
def format_graph(g: Graph) -> str:
    """
    :return:    The canonical text form of g, using vertex ids
    """
    lines = [f"{g.n} {g.edge_count()}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


@validate_types
def parse_matroid(text: str) -> Result[Matroid]:
    """
    :param text:    A matroid in the text format
    :return:        A result containing the matroid, or an error naming the offending line. Exchange property
                    violations are reported with their witness.
    """
    lines = _content_lines(text)
    header_r = _parse_header(lines, "n r")
    if header_r.is_error():
        return error(header_r.error())
    ground_size, rank = header_r.value()
    bases: List[List[int]] = []
    seen: Dict[Tuple[int, ...], int] = {}
    for number, tokens in lines[1:]:
        if not _all_ids(tokens, ground_size):
            return error(f"line {number}: basis elements must be integers in 0..{ground_size - 1}")
        if len(tokens) != rank:
            return error(f"line {number}: basis has {len(tokens)} elements, expected {rank}")
        basis = sorted(int(token) for token in tokens)
        if len(set(basis)) != rank:
            return error(f"line {number}: basis repeats an element")
        if tuple(basis) in seen:
            return error(f"line {number}: duplicate basis (first given on line {seen[tuple(basis)]})")
        seen[tuple(basis)] = number
        bases.append(basis)
    if not bases:
        return error("a matroid needs at least one basis")
    return make_matroid(ground_size, rank, bases)


@validate_types
def format_matroid(m: Matroid) -> str:
    """
    :return:    The canonical text form of m, bases in lexicographic order
    """
    lines = [f"{m.ground_size} {m.rank}"] + [" ".join(str(e) for e in basis) for basis in m.bases]
    return "\n".join(lines) + "\n"


@validate_types
def parse_vertex_list(g: Graph, text: str) -> Result[VertexSet]:
    """
    :param g:       The graph the vertices belong to
    :param text:    Comma separated vertex labels, possibly empty
    :return:        A result containing the set of the named vertices
    """
    members = []
    for label in (token.strip() for token in text.split(",")):
        if label == "":
            continue
        vertex = g.vertex_of(label)
        if vertex is None:
            return error(f"unknown vertex {label!r}")
        members.append(vertex)
    return ok(VertexSet.of(members))
