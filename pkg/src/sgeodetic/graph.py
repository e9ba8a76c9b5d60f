"""Simple connected graphs, hop distances, geodesics and neighbourhood predicates.

Vertices are the integers ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v`` in lexicographic order; ``edge_index`` maps each of
them to its position, which is the bit used by the edge-cover bitsets.
"""

from __future__ import annotations

import warnings
from collections import deque
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import (
    DisconnectedGraph,
    DuplicateEdge,
    GeodesicOverflow,
    LoopEdge,
    VertexOutOfRange,
)

DEFAULT_GEODESIC_CAP = 10**6

Edge = tuple[int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected connected graph.

    ``provenance`` is an optional tag attached by the family generators
    (e.g. ``("bipartite", 4, 3)``); the solver uses it to seed upper bounds.
    """

    def __init__(self, n: int, adj: Sequence[frozenset[int]], provenance=None):
        self.n = n
        self.adj = tuple(adj)
        self.edges: tuple[Edge, ...] = tuple(
            (u, v) for u in range(n) for v in sorted(self.adj[u]) if u < v
        )
        self.edge_index = {e: i for i, e in enumerate(self.edges)}
        self.provenance = provenance

    @property
    def m(self) -> int:
        return len(self.edges)

    def __repr__(self):
        tag = f", provenance={self.provenance!r}" if self.provenance else ""
        return f"Graph(n={self.n}, m={self.m}{tag})"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        return self.adj[u] | {u}

    @cached_property
    def dist(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(_bfs(self.adj, s)) for s in range(self.n))

    @cached_property
    def _sigma(self) -> tuple[tuple[int, ...], ...]:
        # _sigma[s][v] = number of shortest s,v-paths
        out = []
        for s in range(self.n):
            d = self.dist[s]
            sigma = [0] * self.n
            sigma[s] = 1
            for v in sorted(range(self.n), key=d.__getitem__):
                if v == s:
                    continue
                sigma[v] = sum(sigma[w] for w in self.adj[v] if d[w] == d[v] - 1)
            out.append(tuple(sigma))
        return tuple(out)

    @cached_property
    def diameter(self) -> int:
        return max((max(row) for row in self.dist), default=0)

    def edge_mask(self, path: Sequence[int]) -> int:
        """Bitmask over ``edge_index`` of the edges of a walk."""
        mask = 0
        idx = self.edge_index
        for a, b in zip(path, path[1:]):
            mask |= 1 << idx[edge_key(a, b)]
        return mask

    def fingerprint(self) -> str:
        import hashlib

        text = f"{self.n}:" + ";".join(f"{u},{v}" for u, v in self.edges)
        return hashlib.sha256(text.encode()).hexdigest()[:16]


def _bfs(adj, s) -> list[int]:
    d = [-1] * len(adj)
    d[s] = 0
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if d[w] < 0:
                d[w] = d[u] + 1
                queue.append(w)
    return d


def build_graph(
    n: int,
    edges: Iterable[Sequence[int]],
    duplicates: str = "ignore",
    provenance=None,
) -> Graph:
    """Validate an edge list and return a connected :class:`Graph`.

    ``duplicates`` is one of ``"ignore"``, ``"warn"`` or ``"error"``.
    """
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}")
    adj = [set() for _ in range(n)]
    for pair in edges:
        u, v = (int(x) for x in pair)
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRange(f"vertex {x} outside 0..{n - 1}")
        if u == v:
            raise LoopEdge(f"loop at vertex {u}")
        if v in adj[u]:
            if duplicates == "error":
                raise DuplicateEdge(f"edge {edge_key(u, v)} listed twice")
            if duplicates == "warn":
                warnings.warn(f"duplicate edge {edge_key(u, v)} ignored", stacklevel=2)
            continue
        adj[u].add(v)
        adj[v].add(u)
    frozen = [frozenset(a) for a in adj]
    if min(_bfs(frozen, 0)) < 0:
        raise DisconnectedGraph(f"graph on {n} vertices is not connected")
    return Graph(n, frozen, provenance=provenance)


def all_pairs_distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    return g.dist


def count_geodesics(g: Graph, u: int, v: int) -> int:
    return g._sigma[u][v]


def iter_geodesics(g: Graph, u: int, v: int) -> Iterator[tuple[int, ...]]:
    """Yield every shortest u,v-path, lexicographically by vertex sequence."""
    dv = g.dist[v]
    path = [u]

    def rec(x):
        if x == v:
            yield tuple(path)
            return
        for w in sorted(g.adj[x]):
            if dv[w] == dv[x] - 1:
                path.append(w)
                yield from rec(w)
                path.pop()

    yield from rec(u)


def enumerate_geodesics(
    g: Graph, u: int, v: int, cap: int = DEFAULT_GEODESIC_CAP
) -> list[tuple[int, ...]]:
    """All shortest u,v-paths in lexicographic order.

    Raises :class:`GeodesicOverflow` (carrying the exact count) when there are
    more than ``cap`` of them; nothing is enumerated in that case.
    """
    if u == v:
        raise ValueError("geodesics need distinct endpoints")
    count = count_geodesics(g, u, v)
    if count > cap:
        raise GeodesicOverflow(u, v, count, cap)
    return list(iter_geodesics(g, u, v))


def count_geodesics_through(g: Graph, u: int, v: int, edge: Edge) -> int:
    """Number of shortest u,v-paths that use ``edge`` (in either direction)."""
    d = g.dist
    sigma = g._sigma
    a, b = edge
    total = 0
    for x, y in ((a, b), (b, a)):
        if d[u][x] + 1 + d[y][v] == d[u][v]:
            total += sigma[u][x] * sigma[y][v]
    return total


def iter_geodesics_through(
    g: Graph, u: int, v: int, edge: Edge
) -> Iterator[tuple[int, ...]]:
    """Lazily yield the shortest u,v-paths that contain ``edge``."""
    d = g.dist
    a, b = edge
    for x, y in sorted(((a, b), (b, a))):
        if d[u][x] + 1 + d[y][v] != d[u][v]:
            continue
        for head in iter_geodesics(g, u, x) if u != x else [(u,)]:
            for tail in iter_geodesics(g, y, v) if y != v else [(v,)]:
                yield head + tail


def is_geodesic(g: Graph, path: Sequence[int]) -> bool:
    if len(path) < 2:
        return False
    if any(not g.has_edge(a, b) for a, b in zip(path, path[1:])):
        return False
    return len(path) - 1 == g.dist[path[0]][path[-1]]


# -- neighbourhood predicates ----------------------------------------------


def dominant_neighbors(g: Graph, u: int) -> set[int]:
    """Neighbours v of u with N[u] a subset of N[v]."""
    nu = g.closed_neighborhood(u)
    return {v for v in g.adj[u] if nu <= g.closed_neighborhood(v)}


def twins(g: Graph) -> list[Edge]:
    return [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if g.closed_neighborhood(u) == g.closed_neighborhood(v)
    ]


def is_simplicial(g: Graph, u: int) -> bool:
    nbrs = sorted(g.adj[u])
    return all(g.has_edge(a, b) for a, b in combinations(nbrs, 2))


def simplicial_vertices(g: Graph) -> set[int]:
    return {u for u in range(g.n) if is_simplicial(g, u)}


def universal_vertices(g: Graph) -> set[int]:
    return {u for u in range(g.n) if g.degree(u) == g.n - 1}


def cartesian_product(g: Graph, h: Graph, provenance=None) -> Graph:
    """G □ H with vertex (a, b) stored at index ``a * h.n + b``."""
    edges = []
    for a in range(g.n):
        for b, b2 in h.edges:
            edges.append((a * h.n + b, a * h.n + b2))
    for a, a2 in g.edges:
        for b in range(h.n):
            edges.append((a * h.n + b, a2 * h.n + b))
    return build_graph(g.n * h.n, edges, provenance=provenance)
