"""Shared fixtures: reference graphs and the exhaustive corpora.

The six-vertex reference graph (`golden6`) is the package's running example:
nondegenerate, not a claw-free block graph, all dual quadratic values zero,
so its minimum light number is 2.  The spider tree is its 1-lit counterpart.
"""

from __future__ import annotations

import pytest
from hypothesis import strategies as st

from litsigma import Graph
from litsigma.corpus import connected_graphs_up_to_8

# Internal 0-indexed edge list of the 6-vertex reference graph.
GOLDEN_EDGES = [
    (0, 1),
    (0, 2),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 5),
    (3, 4),
    (3, 5),
    (4, 5),
]

GOLDEN_TEXT = "6 10\n" + "\n".join(f"{u} {v}" for u, v in GOLDEN_EDGES) + "\n"

# A 6-vertex tree: path 0-1-2-3-4 with an extra leaf 5 on vertex 2.  It has
# a perfect matching {01, 25, 34}, hence invertible adjacency, and vertex 1
# has even degree, so it is 1-lit.
SPIDER_EDGES = [(0, 1), (1, 2), (2, 3), (3, 4), (2, 5)]


@pytest.fixture(scope="session")
def golden6() -> Graph:
    return Graph.from_edges(6, GOLDEN_EDGES)


@pytest.fixture(scope="session")
def spider6() -> Graph:
    return Graph.from_edges(6, SPIDER_EDGES)


@pytest.fixture(scope="session")
def corpus8() -> list[Graph]:
    """Every connected graph class with n <= 8 (count-checked on load)."""
    return connected_graphs_up_to_8()


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 8):
    """Random connected graphs: a random spanning tree plus random extras."""
    n = draw(st.integers(min_n, max_n))
    edges: set[tuple[int, int]] = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    if n >= 2:
        extra = draw(
            st.sets(
                st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).map(
                    lambda p: (min(p), max(p))
                ).filter(lambda p: p[0] != p[1]),
                max_size=n * 2,
            )
        )
        edges |= extra
    return Graph.from_edges(n, sorted(edges))
