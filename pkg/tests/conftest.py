import random

import pytest
from hypothesis import strategies as st

from mckec.graph import Graph

ACCEPTANCE_LINES: list[str] = []


@st.composite
def graphs(draw, min_n=1, max_n=8, max_m=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_m)) if pairs else []
    return Graph(n, tuple(sorted(chosen)))


@pytest.fixture
def rng():
    return random.Random(20240601)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
