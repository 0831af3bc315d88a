"""
The commands of the xgeo harness. Each command takes the parsed command line arguments and returns a
CommandResult: either a JSON run report, or text in one of the file formats (for `gen` and `basis-graph`, so that
their output can be fed back into the other commands).

Exit codes: 0 when the command completed, 2 when it completed with a negative answer (a NO separation answer, a
failed class requirement, an oracle mismatch or an unsound answer), 1 on errors.
"""
import argparse
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from Common.constants import REPORT_SCHEMA_VERSION
from Common.convexity import hull, is_convex, is_halfspace
from Common.generators import complete, complete_bipartite, cycle, hypercube, octahedron, path, star
from Common.geo_types import JSON
from Common.graph import DistanceMatrix, Graph, all_pairs_distances, make_graph
from Common.json_stream import JSONStream
from Common.result import Result, error, ok
from Common.twosat import to_dimacs
from Common.util import content_digest, stopwatch
from Common.vertex_set import VertexSet
from Matroid.matroid import basis_graph, graphic_matroid, uniform_matroid
from Metric.graph_classes import certify, classify
from Separation.enumeration import enumerate_bruteforce, enumerate_flashlight
from Separation.oracle import oracle_check
from Separation.separation_observer import LoggingSeparationObserver
from Separation.separator import halfspace_separation
from Separation.shadow import make_pair, shadow_closure
from TestHarnesses.graph_io import (
    format_graph,
    format_matroid,
    parse_graph,
    parse_matroid,
    parse_vertex_list,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2


@dataclass(frozen=True)
class RunReport:
    """
    The JSON report of a command run on an input file
    """

    command: str
    input_digest: str
    result: Dict[str, JSON]
    class_certificates: List[JSON] = field(default_factory=list)
    timing_ms: int = 0

    def to_json(self) -> Dict[str, JSON]:
        return {
            "schema": REPORT_SCHEMA_VERSION,
            "command": self.command,
            "input_digest": self.input_digest,
            "result": self.result,
            "class_certificates": self.class_certificates,
            "timing_ms": self.timing_ms,
        }


@dataclass(frozen=True)
class CommandResult:
    exit_code: int
    report: Optional[RunReport] = None
    text: Optional[str] = None
    error: Optional[str] = None


def failure(msg: str) -> CommandResult:
    return CommandResult(EXIT_ERROR, error=msg)


def _read(path_name: str) -> Result[str]:
    try:
        with open(path_name) as handle:
            return ok(handle.read())
    except OSError as exc:
        return error(f"cannot read {path_name}: {exc.strerror}")


@dataclass(frozen=True)
class LoadedGraph:
    text: str
    graph: Graph
    distances: DistanceMatrix

    def certificates(self) -> List[JSON]:
        report = certify(self.graph, self.distances)
        return [] if report is None else [report.summary()]

    def vertex_set(self, text: Optional[str]) -> Result[VertexSet]:
        return parse_vertex_list(self.graph, text or "")


def _load_graph(path_name: str) -> Result[LoadedGraph]:
    text_r = _read(path_name)
    if text_r.is_error():
        return error(text_r.error())
    graph_r = parse_graph(text_r.value())
    if graph_r.is_error():
        return error(f"{path_name}: {graph_r.error()}")
    graph = graph_r.value()
    return ok(LoadedGraph(text_r.value(), graph, all_pairs_distances(graph).assert_value()))


def _with_graph(
    command: str, body: Callable[[LoadedGraph, argparse.Namespace], Result[Tuple[int, Dict[str, JSON]]]]
) -> Callable[[argparse.Namespace, JSONStream], CommandResult]:
    """
    Wrap a command that runs on a graph file: load the graph, time the body and assemble the run report
    """

    def run(args: argparse.Namespace, _: JSONStream) -> CommandResult:
        loaded_r = _load_graph(args.graph)
        if loaded_r.is_error():
            return failure(loaded_r.error())
        loaded = loaded_r.value()
        with stopwatch() as watch:
            outcome_r = body(loaded, args)
        if outcome_r.is_error():
            return failure(outcome_r.error())
        exit_code, result = outcome_r.value()
        report = RunReport(
            command, content_digest(loaded.text), result, loaded.certificates(), watch.elapsed_ms
        )
        return CommandResult(exit_code, report)

    return run


def _classify(loaded: LoadedGraph, _: argparse.Namespace) -> Result[Tuple[int, Dict[str, JSON]]]:
    g, d = loaded.graph, loaded.distances
    result: Dict[str, JSON] = {"classes": [report.summary() for report in classify(g, d)]}
    if not g.has_identity_labels():
        result["labels"] = {g.label_of(v): v for v in range(g.n)}
    return ok((EXIT_OK, result))


def _hull(loaded: LoadedGraph, args: argparse.Namespace) -> Result[Tuple[int, Dict[str, JSON]]]:
    g, d = loaded.graph, loaded.distances
    members_r = loaded.vertex_set(args.set)
    if members_r.is_error():
        return error(members_r.error())
    members = members_r.value()
    return ok(
        (
            EXIT_OK,
            {
                "set": members.to_json(),
                "hull": hull(g, d, members).to_json(),
                "convex": is_convex(g, d, members),
                "halfspace": is_halfspace(g, d, members),
            },
        )
    )


def _sides(loaded: LoadedGraph, args: argparse.Namespace) -> Result[Tuple[VertexSet, VertexSet]]:
    a_r = loaded.vertex_set(args.a)
    if a_r.is_error():
        return error(f"--a: {a_r.error()}")
    b_r = loaded.vertex_set(args.b)
    if b_r.is_error():
        return error(f"--b: {b_r.error()}")
    return ok((a_r.value(), b_r.value()))


def _shadow_closure(loaded: LoadedGraph, args: argparse.Namespace) -> Result[Tuple[int, Dict[str, JSON]]]:
    g, d = loaded.graph, loaded.distances
    sides_r = _sides(loaded, args)
    if sides_r.is_error():
        return error(sides_r.error())
    a, b = sides_r.value()
    observer = LoggingSeparationObserver()
    closed_r = shadow_closure(g, d, a, b, observer)
    if closed_r.is_error():
        return error(closed_r.error())
    closed_a, closed_b = closed_r.value()
    overlap = not closed_a.isdisjoint(closed_b)
    result: Dict[str, JSON] = {
        "rounds": [
            {"round": index, "a": ra.to_json(), "b": rb.to_json()} for index, ra, rb in observer.rounds
        ],
        "a": closed_a.to_json(),
        "b": closed_b.to_json(),
        "overlap": overlap,
        "pair": None,
    }
    if not overlap:
        pair_r = make_pair(g, d, closed_a, closed_b)
        # Sides closed without ever touching have no A-B edge
        if pair_r.is_ok():
            result["pair"] = pair_r.value().summary()
    return ok((EXIT_NEGATIVE if overlap else EXIT_OK, result))


def _write_dimacs(path_name: str, observer: LoggingSeparationObserver) -> Result[bool]:
    formula = observer.last_formula()
    if formula is None:
        return ok(False)
    try:
        with open(path_name, "w") as handle:
            handle.write(to_dimacs(formula))
    except OSError as exc:
        return error(f"cannot write {path_name}: {exc.strerror}")
    return ok(True)


def _separate(loaded: LoadedGraph, args: argparse.Namespace) -> Result[Tuple[int, Dict[str, JSON]]]:
    g, d = loaded.graph, loaded.distances
    sides_r = _sides(loaded, args)
    if sides_r.is_error():
        return error(sides_r.error())
    a, b = sides_r.value()
    certified = certify(g, d) is not None
    if args.require_class and not certified:
        return ok(
            (
                EXIT_NEGATIVE,
                {"refused": "the graph is not weakly bridged, pseudo-modular or a matroid basis graph candidate"},
            )
        )
    observer = LoggingSeparationObserver()
    outcome_r = halfspace_separation(g, d, a, b, certified, observer)
    if outcome_r.is_error():
        return error(outcome_r.error())
    outcome = outcome_r.value()
    result = outcome.summary()
    if args.dimacs_cnf:
        written_r = _write_dimacs(args.dimacs_cnf, observer)
        if written_r.is_error():
            return error(written_r.error())
        result["dimacs"] = args.dimacs_cnf if written_r.value() else None
    return ok((EXIT_NEGATIVE if outcome.answer == "NO" else EXIT_OK, result))


def _enumerate(loaded: LoadedGraph, args: argparse.Namespace) -> Result[Tuple[int, Dict[str, JSON]]]:
    g, d = loaded.graph, loaded.distances
    found = enumerate_flashlight(g, d, certify(g, d) is not None)
    result = found.summary()
    exit_code = EXIT_OK
    if args.oracle:
        brute_r = enumerate_bruteforce(g, d)
        if brute_r.is_error():
            return error(brute_r.error())
        expected = brute_r.value().as_set()
        missing = sorted(expected - found.as_set(), key=VertexSet.sort_key)
        extra = sorted(found.as_set() - expected, key=VertexSet.sort_key)
        result["oracle"] = {
            "count": len(expected),
            "match": not missing and not extra,
            "missing": [h.to_json() for h in missing],
            "extra": [h.to_json() for h in extra],
        }
        if missing or extra:
            exit_code = EXIT_NEGATIVE
    return ok((exit_code, result))


def _oracle_check(loaded: LoadedGraph, args: argparse.Namespace) -> Result[Tuple[int, Dict[str, JSON]]]:
    report_r = oracle_check(loaded.graph, loaded.distances, args.max_ab)
    if report_r.is_error():
        return error(report_r.error())
    report = report_r.value()
    return ok((EXIT_OK if report.passed() else EXIT_NEGATIVE, report.summary()))


def run_basis_graph(args: argparse.Namespace, _: JSONStream) -> CommandResult:
    text_r = _read(args.matroid)
    if text_r.is_error():
        return failure(text_r.error())
    matroid_r = parse_matroid(text_r.value())
    if matroid_r.is_error():
        return failure(f"{args.matroid}: {matroid_r.error()}")
    graph_r = basis_graph(matroid_r.value())
    if graph_r.is_error():
        return failure(graph_r.error())
    return CommandResult(EXIT_OK, text=format_graph(graph_r.value()))


def _int_params(params: List[str], count: int, family: str) -> Result[List[int]]:
    if len(params) != count or not all(p.isdigit() for p in params):
        return error(f"gen {family} takes {count} non-negative integer parameter(s), got {params}")
    return ok([int(p) for p in params])


GRAPH_FAMILIES: Dict[str, Tuple[int, Callable[..., Result[Graph]]]] = {
    "cycle": (1, cycle),
    "complete": (1, complete),
    "path": (1, path),
    "star": (1, star),
    "hypercube": (1, hypercube),
    "bipartite": (2, complete_bipartite),
    "octahedron": (0, lambda: ok(octahedron())),
}


def run_gen(args: argparse.Namespace, _: JSONStream) -> CommandResult:
    family, params = args.family, args.params
    if family in GRAPH_FAMILIES:
        count, generator = GRAPH_FAMILIES[family]
        values_r = _int_params(params, count, family)
        if values_r.is_error():
            return failure(values_r.error())
        graph_r = generator(*values_r.value())
        if graph_r.is_error():
            return failure(graph_r.error())
        return CommandResult(EXIT_OK, text=format_graph(graph_r.value()))
    if family == "uniform":
        values_r = _int_params(params, 2, family)
        if values_r.is_error():
            return failure(values_r.error())
        matroid_r = uniform_matroid(*values_r.value())
    elif family == "graphic":
        if len(params) != 1:
            return failure(f"gen graphic takes a graph file, got {params}")
        loaded_r = _load_graph(params[0])
        if loaded_r.is_error():
            return failure(loaded_r.error())
        matroid_r = graphic_matroid(loaded_r.value().graph)
    else:
        known = sorted(list(GRAPH_FAMILIES) + ["uniform", "graphic"])
        return failure(f"unknown family {family!r} (known: {', '.join(known)})")
    if matroid_r.is_error():
        return failure(matroid_r.error())
    return CommandResult(EXIT_OK, text=format_matroid(matroid_r.value()))


def _check_instance(message: JSON) -> Result[Dict[str, JSON]]:
    """
    Run the pipeline on one {"n", "edges", "a", "b"} instance and check that a YES is a real separation
    """
    try:
        n, edges, a_list, b_list = message["n"], message["edges"], message["a"], message["b"]
        graph_r = make_graph(n, [tuple(edge) for edge in edges])
        a, b = VertexSet.of(a_list), VertexSet.of(b_list)
    except (KeyError, TypeError, ValueError) as exc:
        return error(f"malformed instance: {exc}")
    if graph_r.is_error():
        return error(graph_r.error())
    g = graph_r.value()
    d = all_pairs_distances(g).assert_value()
    outcome_r = halfspace_separation(g, d, a, b)
    if outcome_r.is_error():
        return error(outcome_r.error())
    outcome = outcome_r.value()
    sound = True
    if outcome.halfspace is not None:
        h = outcome.halfspace
        sound = is_halfspace(g, d, h) and a.issubset(h) and h.isdisjoint(b)
    return ok({**outcome.summary(), "sound": sound})


def run_check_stream(_: argparse.Namespace, stream: JSONStream) -> CommandResult:
    """
    Read separation instances from the stream and send back one verdict per instance
    """
    checked = unsound = invalid = 0
    with stopwatch() as watch:
        for index, message_r in enumerate(stream.message_iterator()):
            if message_r.is_error():
                verdict_r: Result[Dict[str, JSON]] = error(message_r.error())
            else:
                verdict_r = _check_instance(message_r.value())
            if verdict_r.is_error():
                invalid += 1
                logging.warning(f"instance {index}: {verdict_r.error()}")
                stream.send_message({"index": index, "error": verdict_r.error()})
                continue
            verdict = verdict_r.value()
            checked += 1
            unsound += 0 if verdict["sound"] else 1
            stream.send_message({"index": index, **verdict})
    result = {"checked": checked, "unsound": unsound, "invalid": invalid}
    exit_code = EXIT_ERROR if invalid else EXIT_NEGATIVE if unsound else EXIT_OK
    return CommandResult(exit_code, RunReport("check-stream", "stdin", result, [], watch.elapsed_ms))


COMMANDS: Dict[str, Callable[[argparse.Namespace, JSONStream], CommandResult]] = {
    "classify": _with_graph("classify", _classify),
    "hull": _with_graph("hull", _hull),
    "shadow-closure": _with_graph("shadow-closure", _shadow_closure),
    "separate": _with_graph("separate", _separate),
    "enumerate": _with_graph("enumerate", _enumerate),
    "oracle-check": _with_graph("oracle-check", _oracle_check),
    "basis-graph": run_basis_graph,
    "gen": run_gen,
    "check-stream": run_check_stream,
}


def run_command(args: argparse.Namespace, stream: JSONStream) -> CommandResult:
    """
    :param args:    Parsed arguments with the command name in args.command
    :param stream:  The JSON stream instance-reading commands read from and write to
    :return:        The outcome of the command
    """
    if args.command not in COMMANDS:
        return failure(f"unknown command {args.command!r}")
    return COMMANDS[args.command](args, stream)
