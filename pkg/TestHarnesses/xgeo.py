"""
The command line entry point of the geodesic convexity toolkit. Run via `python3 -m TestHarnesses.xgeo <command>`
or the `xgeo` script at the repository root. Reports go to stdout as JSON, logs to stderr (set LOG_LEVEL to change
the level, it defaults to WARNING).
"""
import argparse
import logging
import os
import sys
from typing import List, Optional

from Common.json_stream import StdinStdoutJSONStream, json_dump
from TestHarnesses.commands import CommandResult, run_command

LOG_LEVEL = os.environ.get("LOG_LEVEL", "WARNING").upper()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="xgeo", description="Geodesic convexity, halfspace separation and enumeration on graphs"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classify = commands.add_parser("classify", help="check a graph against every supported graph class")
    classify.add_argument("graph", help="graph file")

    hull = commands.add_parser("hull", help="compute the convex hull of a vertex set")
    hull.add_argument("graph", help="graph file")
    hull.add_argument("--set", default="", help="comma separated vertex labels")

    closure = commands.add_parser("shadow-closure", help="trace the shadow closure of two vertex sets")
    closure.add_argument("graph", help="graph file")
    closure.add_argument("--a", required=True, help="comma separated vertex labels of A")
    closure.add_argument("--b", required=True, help="comma separated vertex labels of B")

    separate = commands.add_parser("separate", help="separate two vertex sets by a halfspace")
    separate.add_argument("graph", help="graph file")
    separate.add_argument("--a", default="", help="comma separated vertex labels of A")
    separate.add_argument("--b", default="", help="comma separated vertex labels of B")
    separate.add_argument(
        "--require-class", action="store_true", help="refuse graphs without a class certificate"
    )
    separate.add_argument("--dimacs-cnf", metavar="PATH", help="write the last 2-SAT formula built in DIMACS form")

    enumerate_ = commands.add_parser("enumerate", help="list every halfspace of a graph")
    enumerate_.add_argument("graph", help="graph file")
    enumerate_.add_argument("--oracle", action="store_true", help="compare with brute-force enumeration")

    basis = commands.add_parser("basis-graph", help="build the basis graph of a matroid")
    basis.add_argument("matroid", help="matroid file")

    gen = commands.add_parser("gen", help="generate a graph or matroid of a named family")
    gen.add_argument(
        "family", help="cycle, complete, path, star, hypercube, bipartite, octahedron, uniform or graphic"
    )
    gen.add_argument("params", nargs="*", help="family parameters, or a graph file for graphic")

    oracle = commands.add_parser("oracle-check", help="compare separation with brute force on all small A, B")
    oracle.add_argument("graph", help="graph file")
    oracle.add_argument("--max-ab", type=int, default=2, help="largest size of A and B")

    commands.add_parser("check-stream", help="check separation instances read as JSON from stdin")
    return parser


def emit(result: CommandResult) -> None:
    if result.error is not None:
        logging.error(result.error)
    if result.text is not None:
        sys.stdout.write(result.text)
    if result.report is not None:
        print(json_dump(result.report.to_json()))


def main(argv: Optional[List[str]] = None) -> None:
    logging.basicConfig(level=LOG_LEVEL)
    args = build_parser().parse_args(argv)
    result = run_command(args, StdinStdoutJSONStream())
    emit(result)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    main()
