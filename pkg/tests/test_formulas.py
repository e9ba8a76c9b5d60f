import itertools

import pytest

from sgeodetic.errors import CliqueTooSmall, NotApplicable, PartTooSmall
from sgeodetic.families import complete_bipartite, complete_graph, star_graph, wheel_graph
from sgeodetic.formulas import (
    MultipartiteSpec, PrismSpec, sge_complete, sge_complete_bipartite, sge_complete_multipartite,
    sge_path_times_complete, sge_single_universal,
)


@pytest.mark.parametrize("n, m, value", [
    (4, 4, 5), (3, 3, 5), (5, 4, 6), (5, 3, 5), (6, 6, 7), (2, 2, 3), (6, 4, 6), (7, 7, 9),
])
def test_bipartite(n, m, value):
    assert sge_complete_bipartite(n, m) == value
    assert sge_complete_bipartite(m, n) == value


@pytest.mark.parametrize("parts, value", [
    ([2, 2, 2], 5),
    ([3, 3, 4], 9),
    ([3, 5, 5], 10),
    ([3, 3], 5),
    # the next three have n_1 = 2 and n_2 in {2, 3}, so they get the +1
    ([2, 2, 3], 6),
    ([2, 3, 3], 7),
    ([2, 3, 4], 8),
    ([2, 4, 5], 9),
    ([3, 4, 4], 8),
])
def test_multipartite(parts, value):
    assert sge_complete_multipartite(parts) == value
    assert sge_complete_multipartite(MultipartiteSpec(parts[::-1])) == value


def test_multipartite_two_parts_is_bipartite():
    for n, m in itertools.combinations_with_replacement(range(2, 15), 2):
        assert sge_complete_multipartite([n, m]) == sge_complete_bipartite(n, m)


@pytest.mark.parametrize("n, m, value", [
    (16, 3, 12), (19, 3, 14), (22, 3, 15), (2, 5, 9), (2, 3, 5), (3, 3, 6), (4, 3, 6), (1 + 0, 3, None),
])
def test_prism(n, m, value):
    if value is None:
        with pytest.raises(ValueError):
            sge_path_times_complete((n, m))
        return
    assert sge_path_times_complete((n, m)) == value
    assert sge_path_times_complete(PrismSpec(n, m)) == value


def test_prism_two_rows_is_2m_minus_1():
    assert all(sge_path_times_complete((2, m)) == 2 * m - 1 for m in range(3, 30))


def test_prism_spec_parts():
    s = PrismSpec(22, 3)
    assert (s.k, s.h) == (4, 6)
    assert (PrismSpec(16, 4).k, PrismSpec(16, 4).h) == (4, 0)


def test_hypothesis_violations():
    with pytest.raises(PartTooSmall):
        sge_complete_bipartite(4, 1)
    with pytest.raises(PartTooSmall):
        sge_complete_multipartite([1, 3, 3])
    with pytest.raises(CliqueTooSmall):
        sge_path_times_complete((4, 2))
    with pytest.raises(ValueError):
        sge_complete(0)


def test_complete():
    assert [sge_complete(n) for n in (1, 2, 3, 6)] == [0, 2, 3, 6]


def test_single_universal():
    assert sge_single_universal(wheel_graph(5)) == 5
    assert sge_single_universal(star_graph(4)) == 4
    with pytest.raises(NotApplicable):
        sge_single_universal(complete_graph(4))
    with pytest.raises(NotApplicable):
        sge_single_universal(complete_bipartite(2, 3))
