from pathlib import Path

import pytest
from hypothesis import strategies as st

from sgeodetic.graph import build_graph
from sgeodetic.io import read_graph6_file

DATA = Path(__file__).parent / "data"


def corpus(n):
    return read_graph6_file(DATA / f"connected{n}.g6")


@pytest.fixture(scope="session")
def census():
    return {n: corpus(n) for n in range(1, 8)}


@st.composite
def connected_graphs(draw, min_n=2, max_n=7):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    extra = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * 2))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    return build_graph(n, sorted(edges))
