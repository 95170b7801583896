from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from cdgraph import Graph


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


def graph_from_mask(n: int, mask: int) -> Graph:
    pairs = list(combinations(range(n), 2))
    return Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])


@st.composite
def graphs(draw, max_n: int = 8, min_n: int = 1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return graph_from_mask(n, mask)


@pytest.fixture(scope="session")
def small_corpus() -> list[Graph]:
    """A spread of named graphs exercising every structural case."""
    from cdgraph import complete_graph, figure2_graph, odd_family

    k2 = complete_graph(2)
    corpus = [
        Graph(1),
        Graph(3),
        k2,
        path_graph(3),
        path_graph(4),
        path_graph(5),
        cycle_graph(4),
        cycle_graph(5),
        cycle_graph(6),
        complete_graph(4),
        complete_graph(6),
        figure2_graph(),
        odd_family(8),
        disjoint_union(k2, k2),
        disjoint_union(k2, complete_graph(4)),
        disjoint_union(complete_graph(3), complete_graph(3)),
    ]
    return corpus
