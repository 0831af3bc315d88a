"""
A simple python script meant to fuzz the separation pipeline by generating random connected graphs together with
two disjoint vertex sets. Prints one JSON instance per line, ready to be piped into `xgeo check-stream`.

Usage: python3 -m TestHarnesses.fuzzers.separation.fuzz [count] [seed]
"""
# pylint: skip-file
import random
import sys
from typing import List, Tuple

from Common.geo_types import JSON
from Common.json_stream import json_dump

MIN_VERTICES = 2
MAX_VERTICES = 9


def random_connected_edges(rng: random.Random, n: int) -> List[Tuple[int, int]]:
    # A random spanning tree plus a random sprinkling of extra edges
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    density = rng.random()
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density * 0.5:
                edges.add((u, v))
    return sorted(edges)


def generate_testcase(rng: random.Random) -> JSON:
    n = rng.randint(MIN_VERTICES, MAX_VERTICES)
    vertices = list(range(n))
    rng.shuffle(vertices)
    a_size = rng.randint(1, max(1, n // 2))
    b_size = rng.randint(1, n - a_size)
    return {
        "n": n,
        "edges": [list(edge) for edge in random_connected_edges(rng, n)],
        "a": sorted(vertices[:a_size]),
        "b": sorted(vertices[a_size : a_size + b_size]),
    }


if __name__ == "__main__":
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 100
    rng = random.Random(int(sys.argv[2]) if len(sys.argv) > 2 else None)
    for _ in range(count):
        print(json_dump(generate_testcase(rng)))
