from __future__ import annotations

import json
import os
from itertools import combinations, product
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from primegraph.graph import Graph, make_graph

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

DATA = Path(__file__).parent / "data"

# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def derived() -> dict:
    return json.loads((DATA / "derived_oracles.json").read_text())


@st.composite
def graphs(draw, min_n: int = 0, max_n: int = 8) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return make_graph(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def relabelings(draw, g: Graph):
    return tuple(draw(st.permutations(range(g.n))))


# ----------------------------------------------------------- naive oracles


def brute_three_colorable(g: Graph) -> bool:
    edges = g.edges()
    return any(all(c[u] != c[v] for u, v in edges) for c in product(range(3), repeat=g.n))


def brute_chromatic(g: Graph) -> int:
    edges = g.edges()
    for k in range(g.n + 1):
        if any(all(c[u] != c[v] for u, v in edges) for c in product(range(k), repeat=g.n)):
            return k
    raise AssertionError("unreachable")


def brute_triangles(g: Graph) -> int:
    return sum(
        1
        for a, b, c in combinations(range(g.n), 3)
        if g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    )


def all_graphs(n: int):
    pairs = list(combinations(range(n), 2))
    for m in range(1 << len(pairs)):
        yield make_graph(n, [p for i, p in enumerate(pairs) if m >> i & 1])
