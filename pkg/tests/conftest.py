from __future__ import annotations

import random
from itertools import combinations

import pytest

from flagub.graph import Graph


def brute_clique_counts(g: Graph) -> list[int]:
    """Clique counts by checking every vertex subset."""
    counts = [0] * (g.n + 1)
    for mask in range(1 << g.n):
        vs = [v for v in range(g.n) if mask >> v & 1]
        if all(g.has_edge(a, b) for a, b in combinations(vs, 2)):
            counts[len(vs)] += 1
    while len(counts) > 2 and counts[-1] == 0:
        counts.pop()
    return counts


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


@pytest.fixture
def rng():
    return random.Random(20240607)


def pytest_terminal_summary(terminalreporter):
    mod = __import__("sys").modules.get("test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
