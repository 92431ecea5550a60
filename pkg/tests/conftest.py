from __future__ import annotations

import random

import pytest
from hypothesis import strategies as st

from hopfsimp.complex import from_facets
from hopfsimp.graph import Graph

# lines collected by test_acceptance.py, printed once at the end of the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
        terminalreporter.write_line(line)


@pytest.fixture
def paw():
    return from_facets(4, [[0, 1, 2], [2, 3]])


@pytest.fixture
def paw_graph():
    return Graph.make(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@st.composite
def complexes(draw, min_n=1, max_n=5):
    n = draw(st.integers(min_n, max_n))
    sets = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1), max_size=6))
    return from_facets(n, sets)


def random_complex(rng: random.Random, n: int):
    k = rng.randint(1, 5)
    sets = [[v for v in range(n) if rng.random() < 0.5] for _ in range(k)]
    return from_facets(n, sets)


def random_tree(rng: random.Random, n: int) -> Graph:
    """Uniform labelled tree from a Prüfer sequence."""
    if n <= 1:
        return Graph.make(n, [])
    if n == 2:
        return Graph.make(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(n) if degree[x] == 1]
    edges.append((u, w))
    return Graph.make(n, edges)
