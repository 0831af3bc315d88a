"""
Holds the type definitions shared across the codebase, to be used with mypy (and @validate_types) for type
checking this implementation
"""
from typing import Any, Tuple

from typing_extensions import Literal

# A type meant to represent JSON
JSON = Any

# A vertex is a dense 0-based index into a graph
Vertex = int

# An undirected edge, always stored with the smaller endpoint first
Edge = Tuple[int, int]

# The graph classes checked by Metric.graph_classes. Reports use these names verbatim.
ClassName = Literal[
    "triangle_condition",
    "quadrangle_condition",
    "weakly_modular",
    "meshed",
    "pseudo_modular",
    "pseudo_modular_3helly",
    "bridged",
    "weakly_bridged",
    "convex_balls",
    "k_simple_descent",
    "interval_condition",
    "positioning_condition",
    "matroid_basis_graph",
]

# The answer of a halfspace separation query. UNKNOWN means some branch could not be decided, which is only
# expected on graphs without a class certificate.
Answer = Literal["YES", "NO", "UNKNOWN"]

# Why a single branch (path edge) of the separation pipeline did not produce a halfspace
BranchFailure = Literal[
    "closure-overlap",
    "formula-UNSAT",
    "verification-failed",
    "tc-prerequisite-failed",
]
