from __future__ import annotations

from itertools import combinations, permutations

import pytest
from hypothesis import strategies as st

from trimin.graph import Graph, build_graph

# Lines recorded by the acceptance tests, echoed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def brute_triangles(g: Graph) -> int:
    return sum(1 for a, b, c in combinations(range(g.n), 3)
               if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c))


def brute_key(g: Graph) -> tuple:
    """Isomorphism key by minimising the sorted edge list over all relabellings (n <= 7)."""
    best = None
    for perm in permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return (g.n, best)


def labelled_graphs(n: int, e: int):
    pairs = list(combinations(range(n), 2))
    for chosen in combinations(pairs, e):
        yield build_graph(n, chosen)


@pytest.fixture
def rng():
    import random

    return random.Random(12345)
