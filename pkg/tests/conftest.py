import itertools
from contextlib import contextmanager

import pytest
from hypothesis import strategies as st

from peeliso.graph import Graph

_CRITERIA: list[str] = []


@st.composite
def graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph(range(1, n + 1), edges)


@st.composite
def graphs_with_permutation(draw, min_n=1, max_n=9):
    g = draw(graphs(min_n, max_n))
    images = draw(st.permutations(list(g.vertices)))
    return g, dict(zip(g.vertices, images))


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion for the summary."""

    @contextmanager
    def check(label):
        try:
            yield
        except BaseException:
            _CRITERIA.append(f"FAIL  {label}")
            raise
        _CRITERIA.append(f"PASS  {label}")

    return check


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
