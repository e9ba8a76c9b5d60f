"""Generators for the graph families used throughout the toolkit.

Every generator tags its output with a ``provenance`` tuple so the solver can
recognise the family without isomorphism testing.
"""

from __future__ import annotations

from itertools import combinations

from .graph import Graph, build_graph


def complete_graph(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2), provenance=("complete", n))


def path_graph(n: int) -> Graph:
    return build_graph(n, ((i, i + 1) for i in range(n - 1)), provenance=("path", n))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)), provenance=("cycle", n))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}; the centre is vertex 0."""
    return build_graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)), provenance=("star", leaves))


def wheel_graph(rim: int) -> Graph:
    """Cycle on ``rim`` vertices (0..rim-1) plus a hub at index ``rim``."""
    edges = [(i, (i + 1) % rim) for i in range(rim)] + [(i, rim) for i in range(rim)]
    return build_graph(rim + 1, edges, provenance=("wheel", rim))


def complete_multipartite(parts) -> Graph:
    """K_{n_1,...,n_k} with parts laid out consecutively in the given order."""
    parts = list(parts)
    label = [i for i, size in enumerate(parts) for _ in range(size)]
    n = sum(parts)
    edges = [(u, v) for u, v in combinations(range(n), 2) if label[u] != label[v]]
    return build_graph(n, edges, provenance=("multipartite", *parts))


def complete_bipartite(n: int, m: int) -> Graph:
    """K_{n,m}: side X is 0..n-1, side Y is n..n+m-1."""
    g = complete_multipartite([n, m])
    g.provenance = ("bipartite", n, m)
    return g


def path_times_complete(n: int, m: int) -> Graph:
    """P_n □ K_m; vertex (i, j), 0-based, sits at index ``i * m + j``."""
    edges = []
    for i in range(n):
        for a, b in combinations(range(m), 2):
            edges.append((i * m + a, i * m + b))
    for i in range(n - 1):
        for j in range(m):
            edges.append((i * m + j, (i + 1) * m + j))
    return build_graph(n * m, edges, provenance=("prism", n, m))
