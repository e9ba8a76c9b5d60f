from itertools import combinations

import pytest
from hypothesis import given, settings

from sgeodetic.errors import BudgetExhausted, InstanceTooLarge
from sgeodetic.families import (
    complete_bipartite, complete_graph, cycle_graph, path_graph, path_times_complete,
    star_graph, wheel_graph,
)
from sgeodetic.graph import build_graph, universal_vertices
from sgeodetic.solver import (
    colex, forced_vertices, lower_bound, naive_decide, sge_equals_n, sge_exact, sge_oracle,
)
from sgeodetic.verifier import is_strong_edge_geodetic, validate_witness

from conftest import connected_graphs


def _brute_forced(g):
    # vertices lying in every strong edge geodetic set, by exhaustion
    good = [set(xs) for k in range(g.n + 1) for xs in combinations(range(g.n), k)
            if naive_decide(g, xs) is not None]
    return frozenset.intersection(*map(frozenset, good))


def test_forced_examples():
    assert forced_vertices(complete_graph(5)) == frozenset(range(5))
    assert forced_vertices(cycle_graph(5)) == frozenset()
    prism = path_times_complete(2, 3)
    assert forced_vertices(prism) == frozenset()
    assert _brute_forced(prism) == frozenset()
    assert forced_vertices(path_graph(4)) == {0, 3}


def test_lower_bound_examples():
    assert lower_bound(complete_graph(6)) == 6
    assert lower_bound(wheel_graph(5)) == 5
    assert lower_bound(path_graph(3)) == 2
    assert lower_bound(build_graph(1, [])) == 0


@pytest.mark.parametrize("g, value", [
    (complete_graph(4), 4),
    (cycle_graph(4), 3),
    (path_times_complete(2, 3), 5),
    (path_graph(5), 2),
    (star_graph(4), 4),
    (build_graph(1, []), 0),
])
def test_exact_examples(g, value):
    res = sge_exact(g)
    assert res.value == value == len(res.optimal_set)
    assert validate_witness(g, res.witness).valid
    assert res.witness.vertices == frozenset(res.optimal_set)


@pytest.mark.parametrize("g, value", [
    (path_graph(4), 2), (cycle_graph(5), 3), (cycle_graph(4), 3), (complete_bipartite(3, 3), 5),
])
def test_oracle_examples(g, value):
    res = sge_oracle(g, all_optimal=True)
    assert res.value == value
    assert validate_witness(g, res.witness).valid
    assert all(len(xs) == value for xs in res.all_optimal)


def test_oracle_size_guard():
    with pytest.raises(InstanceTooLarge):
        sge_oracle(path_graph(11))


def test_colex_order():
    assert colex(combinations(range(4), 2)) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_exact_returns_colex_first_optimal_set():
    g = cycle_graph(6)
    oracle = sge_oracle(g, all_optimal=True)
    res = sge_exact(g)
    # exact only searches supersets of the forced set; here that set is empty
    assert res.optimal_set == oracle.optimal_set == colex(oracle.all_optimal)[0]


def test_sge_equals_n_examples():
    assert sge_equals_n(complete_graph(4))
    assert not sge_equals_n(complete_graph(1))  # value 0, not 1
    assert not sge_equals_n(cycle_graph(4))
    assert not sge_equals_n(star_graph(3))


def test_budget_reports_interval():
    with pytest.raises(BudgetExhausted) as info:
        sge_exact(complete_bipartite(5, 5), budget=50, seed=False)
    exc = info.value
    assert exc.lower <= 7 <= exc.upper
    assert exc.nodes >= 50


def test_seeded_upper_bound_in_interval():
    with pytest.raises(BudgetExhausted) as info:
        sge_exact(complete_bipartite(5, 5), budget=50)
    assert info.value.upper == 7  # the construction size


@settings(max_examples=60, deadline=None)
@given(g=connected_graphs(max_n=8))
def test_exact_matches_oracle(g):
    exact, oracle = sge_exact(g), sge_oracle(g)
    assert exact.value == oracle.value
    assert validate_witness(g, exact.witness).valid
    assert forced_vertices(g) <= frozenset(exact.optimal_set)
    assert lower_bound(g) <= exact.value


@settings(max_examples=40, deadline=None)
@given(g=connected_graphs(min_n=3, max_n=8))
def test_single_universal_vertex(g):
    if len(universal_vertices(g)) == 1:
        assert sge_exact(g).value == g.n - 1


@settings(max_examples=40, deadline=None)
@given(g=connected_graphs(max_n=7))
def test_sge_equals_n_characterization(g):
    assert sge_equals_n(g) == (sge_oracle(g).value == g.n)


@pytest.mark.slow
def test_threads_deterministic():
    g = complete_bipartite(4, 4)
    one = sge_exact(g, threads=1)
    two = sge_exact(g, threads=2)
    assert (one.value, one.optimal_set, one.witness) == (two.value, two.optimal_set, two.witness)


def test_exact_and_decider_agree_below_optimum():
    g = path_times_complete(3, 3)
    res = sge_exact(g)
    assert res.value == 6
    free = [v for v in range(g.n) if v not in res.forced]
    for xs in combinations(free, res.value - 1 - len(res.forced)):
        assert is_strong_edge_geodetic(g, set(xs) | res.forced) is None
