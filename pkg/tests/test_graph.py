from itertools import combinations

import pytest
from hypothesis import given, settings

from sgeodetic.errors import DisconnectedGraph, DuplicateEdge, GeodesicOverflow, LoopEdge, VertexOutOfRange
from sgeodetic.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    path_times_complete,
    star_graph,
)
from sgeodetic.graph import (
    all_pairs_distances,
    build_graph,
    cartesian_product,
    count_geodesics,
    count_geodesics_through,
    dominant_neighbors,
    enumerate_geodesics,
    is_geodesic,
    iter_geodesics_through,
    simplicial_vertices,
    twins,
    universal_vertices,
)

from conftest import connected_graphs


def brute_paths(g, u, v):
    """All simple u,v-paths by DFS, kept when their length is minimal."""
    out = []

    def dfs(path):
        if path[-1] == v:
            out.append(tuple(path))
            return
        for w in sorted(g.adj[path[-1]]):
            if w not in path:
                dfs(path + [w])

    dfs([u])
    best = min(len(p) for p in out)
    return sorted(p for p in out if len(p) == best)


def test_build_triangle():
    g = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert g.n == 3 and g.m == 3
    assert sorted(g.edge_index.values()) == [0, 1, 2]


def test_build_c4():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert all(g.degree(v) == 2 for v in range(4))


def test_build_rejects_disconnected():
    with pytest.raises(DisconnectedGraph):
        build_graph(4, [(0, 1), (2, 3)])


@pytest.mark.parametrize("edges, exc", [
    ([(0, 0)], LoopEdge),
    ([(0, 4)], VertexOutOfRange),
    ([(-1, 0)], VertexOutOfRange),
])
def test_build_rejects_bad_edges(edges, exc):
    with pytest.raises(exc):
        build_graph(4, edges)


def test_duplicate_edges():
    g = build_graph(2, [(0, 1), (1, 0)])
    assert g.m == 1
    with pytest.raises(DuplicateEdge):
        build_graph(2, [(0, 1), (1, 0)], duplicates="error")
    with pytest.warns(UserWarning):
        build_graph(2, [(0, 1), (0, 1)], duplicates="warn")


def test_distances_examples():
    d = all_pairs_distances(cycle_graph(4))
    assert d[0][2] == 2 and d[0][1] == 1
    d = all_pairs_distances(complete_graph(4))
    assert all(d[u][v] == 1 for u, v in combinations(range(4), 2))
    assert all_pairs_distances(path_graph(4))[0][3] == 3


@given(connected_graphs())
def test_distance_matrix_axioms(g):
    d = g.dist
    for u in range(g.n):
        assert d[u][u] == 0
        for v in range(g.n):
            assert d[u][v] == d[v][u]
            assert (d[u][v] == 1) == g.has_edge(u, v)
            for w in range(g.n):
                assert d[u][w] <= d[u][v] + d[v][w]


def test_geodesic_examples():
    assert enumerate_geodesics(cycle_graph(4), 0, 2) == [(0, 1, 2), (0, 3, 2)]
    assert enumerate_geodesics(complete_bipartite(2, 2), 0, 1) == [(0, 2, 1), (0, 3, 1)]
    assert enumerate_geodesics(path_graph(4), 0, 3) == [(0, 1, 2, 3)]


def test_geodesic_overflow_carries_exact_count():
    g = complete_bipartite(2, 7)
    with pytest.raises(GeodesicOverflow) as info:
        enumerate_geodesics(g, 0, 1, cap=3)
    assert info.value.count == 7


@settings(max_examples=60)
@given(connected_graphs(max_n=7))
def test_geodesics_match_brute_force(g):
    for u, v in combinations(range(g.n), 2):
        paths = enumerate_geodesics(g, u, v)
        assert paths == brute_paths(g, u, v)
        assert len(paths) == count_geodesics(g, u, v)
        assert all(is_geodesic(g, p) for p in paths)
        for e in g.edges:
            through = [p for p in paths if g.edge_mask(p) >> g.edge_index[e] & 1]
            assert count_geodesics_through(g, u, v, e) == len(through)
            assert sorted(iter_geodesics_through(g, u, v, e)) == sorted(through)


def closed(g, u):
    return {u} | {v for v in range(g.n) if g.has_edge(u, v)}


def test_dominant_neighbor_examples():
    assert dominant_neighbors(complete_graph(3), 0) == {1, 2}
    # direct check on C4: N[0] = {0,1,3}, N[1] = {0,1,2}, N[3] = {0,2,3}
    c4 = cycle_graph(4)
    assert not closed(c4, 0) <= closed(c4, 1) and not closed(c4, 0) <= closed(c4, 3)
    assert dominant_neighbors(c4, 0) == set()
    star = star_graph(3)
    assert dominant_neighbors(star, 1) == {0}


def test_twins_examples():
    assert twins(complete_graph(5)) == list(combinations(range(5), 2))
    assert twins(cycle_graph(5)) == []
    k4e = build_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])  # minus edge 23
    expected = [(u, v) for u, v in combinations(range(4), 2) if closed(k4e, u) == closed(k4e, v)]
    assert expected == [(0, 1)]
    assert twins(k4e) == expected


def test_simplicial_and_universal_examples():
    assert simplicial_vertices(complete_graph(5)) == set(range(5))
    assert simplicial_vertices(cycle_graph(4)) == set()
    assert simplicial_vertices(path_graph(3)) == {0, 2}
    assert universal_vertices(star_graph(4)) == {0}
    assert universal_vertices(complete_graph(4)) == set(range(4))
    assert universal_vertices(cycle_graph(5)) == set()


@given(connected_graphs())
def test_neighbourhood_invariants(g):
    dom = {u: dominant_neighbors(g, u) for u in range(g.n)}
    for u in range(g.n):
        for v in dom[u]:
            assert g.has_edge(u, v) and closed(g, u) <= closed(g, v)
    pairs = set(twins(g))
    for u, v in combinations(range(g.n), 2):
        assert ((u, v) in pairs) == (u in dom[v] and v in dom[u])
    for u in simplicial_vertices(g):
        if g.degree(u):
            assert dom[u]


def test_cartesian_small_products():
    p2 = path_graph(2)
    sq = cartesian_product(p2, p2)
    # P2 x P2 is the 4-cycle 0-1-3-2-0
    assert sq.edges == ((0, 1), (0, 2), (1, 3), (2, 3))
    assert all(sq.degree(v) == 2 for v in range(4))
    prism = cartesian_product(p2, complete_graph(3))
    assert (prism.n, prism.m) == (6, 9)


@pytest.mark.parametrize("n, m", [(2, 3), (3, 3), (4, 5), (6, 4)])
def test_path_times_complete_edge_count(n, m):
    g = cartesian_product(path_graph(n), complete_graph(m))
    # count edges straight from the product definition
    vertices = [(a, b) for a in range(n) for b in range(m)]
    brute = sum(
        1
        for (a, b), (c, d) in combinations(vertices, 2)
        if (a == c and b != d) or (b == d and abs(a - c) == 1)
    )
    assert g.m == brute == n * m * (m - 1) // 2 + (n - 1) * m
    assert g == path_times_complete(n, m)


@settings(max_examples=30)
@given(connected_graphs(max_n=4), connected_graphs(max_n=4))
def test_cartesian_degree_sum(g, h):
    gh = cartesian_product(g, h)
    for a in range(g.n):
        for b in range(h.n):
            assert gh.degree(a * h.n + b) == g.degree(a) + h.degree(b)
