"""Immutable simple undirected graphs on dense vertex labels 0..n-1.

Adjacency is stored as one bitmask per vertex, so the structural
predicates used by the solvable-group checks (degrees, distances,
components, blocks) are single-word operations for the graph orders
this package targets.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator

INFINITY = math.inf


def _bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph: no self-loops, no multi-edges, labels 0..n-1.

    Instances are immutable after construction and hashable, so they are
    safe to share across workers and to use as cache keys.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) is not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n: int = n
        self._adj: tuple[int, ...] = tuple(adj)

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "Graph":
        """Trusted constructor from adjacency bitmasks (no validation)."""
        g = object.__new__(cls)
        g.n = n
        g._adj = tuple(masks)
        return g

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._adj

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range 0..{self.n - 1}")
        return tuple(_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex pair ({u}, {v}) out of range")
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self._adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"<Graph n={self.n} m={self.edge_count}>"


def _require_vertices(g: Graph, what: str) -> None:
    if g.n == 0:
        raise ValueError(f"{what} is undefined for the empty graph")


def degree_multiset(g: Graph) -> tuple[int, ...]:
    """All vertex degrees, sorted descending."""
    return tuple(sorted((m.bit_count() for m in g._adj), reverse=True))


def all_degrees_odd(g: Graph) -> bool:
    _require_vertices(g, "all_degrees_odd")
    return all(m.bit_count() & 1 for m in g._adj)


def all_degrees_even(g: Graph) -> bool:
    _require_vertices(g, "all_degrees_even")
    return not any(m.bit_count() & 1 for m in g._adj)


def _reachable_mask(adj: tuple[int, ...], start: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        grown = 0
        for v in _bits(frontier):
            grown |= adj[v]
        frontier = grown & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph) -> list[frozenset[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    components = []
    remaining = (1 << g.n) - 1
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        comp = _reachable_mask(g._adj, start)
        components.append(frozenset(_bits(comp)))
        remaining &= ~comp
    return components


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return _reachable_mask(g._adj, 0) == (1 << g.n) - 1


def bfs_distances(g: Graph, source: int) -> list[int | float]:
    """Shortest-path distances from ``source``; unreachable -> inf."""
    if not 0 <= source < g.n:
        raise ValueError(f"vertex {source} out of range 0..{g.n - 1}")
    dist: list[int | float] = [INFINITY] * g.n
    dist[source] = 0
    seen = 1 << source
    frontier = seen
    d = 0
    adj = g._adj
    while frontier:
        grown = 0
        for v in _bits(frontier):
            grown |= adj[v]
        frontier = grown & ~seen
        seen |= frontier
        d += 1
        for v in _bits(frontier):
            dist[v] = d
    return dist


def distance_matrix(g: Graph) -> list[list[int | float]]:
    """Pairwise shortest-path distances; inf across components."""
    return [bfs_distances(g, v) for v in range(g.n)]


def eccentricity(g: Graph, v: int) -> int | float:
    return max(bfs_distances(g, v))


def diameter(g: Graph) -> int | float:
    """Largest pairwise distance; inf when disconnected, 0 for n=1."""
    _require_vertices(g, "diameter")
    if not is_connected(g):
        return INFINITY
    return max(eccentricity(g, v) for v in range(g.n))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph induced by ``vertices``, relabeled 0..k-1.

    Returns the subgraph together with the label map: position i of the
    returned tuple is the original label of new vertex i (original labels
    in increasing order).
    """
    labels = tuple(sorted(set(vertices)))
    for v in labels:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(labels)}
    masks = [0] * len(labels)
    for i, v in enumerate(labels):
        for w in _bits(g._adj[v]):
            j = index.get(w)
            if j is not None:
                masks[i] |= 1 << j
    return Graph.from_masks(len(labels), masks), labels


def is_complete(g: Graph) -> bool:
    _require_vertices(g, "is_complete")
    full = (1 << g.n) - 1
    return all(g._adj[v] == full ^ (1 << v) for v in range(g.n))


def is_regular(g: Graph) -> tuple[bool, int | None]:
    """Whether all degrees are equal; returns (True, k) or (False, None)."""
    _require_vertices(g, "is_regular")
    k = g._adj[0].bit_count()
    for m in g._adj:
        if m.bit_count() != k:
            return False, None
    return True, k


def is_eulerian(g: Graph) -> bool:
    """Standard reading: connected and every vertex of even degree."""
    _require_vertices(g, "is_eulerian")
    return is_connected(g) and all_degrees_even(g)


@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (maximal 2-connected subgraphs, bridge edges, or isolated
    vertices) together with the cut vertices."""

    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def block_decomposition(g: Graph) -> BlockDecomposition:
    """Lowpoint (Hopcroft-Tarjan) block/cut-vertex decomposition.

    Every edge lies in exactly one block; isolated vertices form
    singleton blocks. Blocks are returned sorted by vertex content.
    """
    n = g.n
    adj = g._adj
    disc = [-1] * n
    low = [0] * n
    blocks: list[frozenset[int]] = []
    cuts: set[int] = set()
    timer = 0
    edge_stack: list[tuple[int, int]] = []

    for root in range(n):
        if disc[root] != -1:
            continue
        if adj[root] == 0:
            disc[root] = timer
            timer += 1
            blocks.append(frozenset((root,)))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, int, Iterator[int]]] = [(root, -1, _bits(adj[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, _bits(adj[w])))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] >= disc[u]:
                    if u != root:
                        cuts.add(u)
                    members: set[int] = set()
                    while True:
                        e = edge_stack.pop()
                        members.add(e[0])
                        members.add(e[1])
                        if e == (u, v):
                            break
                    blocks.append(frozenset(members))
        if root_children >= 2:
            cuts.add(root)

    blocks.sort(key=sorted)
    return BlockDecomposition(tuple(blocks), frozenset(cuts))


def cut_vertices(g: Graph) -> frozenset[int]:
    return block_decomposition(g).cut_vertices


def is_block(g: Graph) -> bool:
    """Whole graph is a single block: connected and without cut vertices.

    A single vertex and a single edge both count as blocks.
    """
    _require_vertices(g, "is_block")
    return is_connected(g) and not block_decomposition(g).cut_vertices
