"""
A module to hold the caps and defaults used across the codebase. Operations that apply a cap take it as a keyword
argument defaulting to the value here.
"""

# Matroids are explicit basis lists, so both the ground set and the basis list are capped
MAX_GROUND_SIZE = 16
MAX_BASES = 4096

# Spanning trees are enumerated explicitly for graphic matroids
MAX_GRAPHIC_VERTICES = 8

# Brute-force halfspace enumeration filters all 2^n subsets
MAX_BRUTEFORCE_VERTICES = 16

# Brute-force 2-SAT model counting enumerates all 2^k assignments
MAX_BRUTEFORCE_VARIABLES = 25

# Induced cycle lengths has_induced_cycle knows how to look for
INDUCED_CYCLE_LENGTHS = (4, 5)

# Version of the JSON run report emitted by the harness
REPORT_SCHEMA_VERSION = 1
