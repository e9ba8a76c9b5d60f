"""Checking and deciding strong edge geodetic sets.

A set X is strong edge geodetic when one geodesic can be assigned to each
pair of X (or none) so that the assigned paths cover every edge. The
assignment is the :class:`Witness`.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExhausted, ForeignVertex, GeodesicOverflow, MalformedPath
from .graph import (
    DEFAULT_GEODESIC_CAP,
    Graph,
    count_geodesics,
    count_geodesics_through,
    edge_key,
    enumerate_geodesics,
    iter_geodesics_through,
)
from . import _search

try:
    if os.environ.get("SGE_PURE_PYTHON"):
        raise ImportError("compiled kernel disabled by SGE_PURE_PYTHON")
    from ._csearch import search as _compiled_search
except ImportError:
    _compiled_search = None

DEFAULT_BUDGET = 10**8


def kernel_name() -> str:
    """``"compiled"`` when the Cython kernel was importable, else ``"python"``."""
    return "compiled" if _compiled_search is not None else "python"


@dataclass(frozen=True)
class Witness:
    """A vertex set plus at most one geodesic per unordered pair of it.

    ``paths`` maps sorted pairs ``(u, v)`` to vertex sequences running from
    one endpoint to the other.
    """

    vertices: frozenset[int]
    paths: Mapping[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    @classmethod
    def from_paths(cls, vertices: Iterable[int], paths: Iterable[Sequence[int]]) -> "Witness":
        """Build a witness keyed by each path's endpoints.

        Raises ``ValueError`` if two paths share the same endpoint pair.
        """
        out = {}
        for p in paths:
            p = tuple(p)
            key = edge_key(p[0], p[-1])
            if key in out:
                raise ValueError(f"pair {key} assigned two paths")
            out[key] = p
        return cls(frozenset(vertices), dict(sorted(out.items())))

    def __len__(self):
        return len(self.vertices)


@dataclass
class VerifyReport:
    covered: set
    uncovered: set
    valid: bool
    problems: list = field(default_factory=list)


def validate_witness(g: Graph, w: Witness) -> VerifyReport:
    """Polynomial-time check of a witness against ``g``.

    Raises :class:`ForeignVertex` for vertices outside ``g`` and
    :class:`MalformedPath` for walks with non-adjacent consecutive vertices.
    Every other defect (wrong endpoints, non-shortest walk, endpoints outside
    the set) makes the report invalid and is listed in ``problems``.
    """
    for x in w.vertices:
        if not 0 <= x < g.n:
            raise ForeignVertex(f"vertex {x} not in graph on {g.n} vertices")
    problems = []
    covered = set()
    for pair, path in w.paths.items():
        for x in (*pair, *path):
            if not 0 <= x < g.n:
                raise ForeignVertex(f"vertex {x} not in graph on {g.n} vertices")
        if len(path) < 2:
            raise MalformedPath(f"path {list(path)} for pair {list(pair)} has no edge")
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                raise MalformedPath(f"{a} and {b} are not adjacent in path {list(path)}")
        u, v = pair
        if u == v or edge_key(path[0], path[-1]) != edge_key(u, v):
            problems.append(f"path {list(path)} does not join pair {list(pair)}")
        if not (u in w.vertices and v in w.vertices):
            problems.append(f"pair {list(pair)} not inside the set")
        if len(path) - 1 != g.dist[path[0]][path[-1]]:
            problems.append(f"path {list(path)} is not a shortest path")
        covered.update(edge_key(a, b) for a, b in zip(path, path[1:]))
    uncovered = set(g.edges) - covered
    return VerifyReport(covered, uncovered, not uncovered and not problems, problems)


@dataclass
class _Problem:
    pairs: list
    cand_pair: list
    cand_mask: list
    cand_path: list
    edge_cands: list
    pair_len: list
    lazy: dict  # pair index -> geodesic count, for overflowed pairs


def _pair_options(g: Graph, u: int, v: int, cap: int):
    """``(paths, masks, union)`` for the pair, cached on the graph; None on overflow."""
    cache = g.__dict__.setdefault("_geodesic_cache", {})
    key = (u, v, cap)
    if key not in cache:
        try:
            paths = enumerate_geodesics(g, u, v, cap)
        except GeodesicOverflow:
            cache[key] = None
        else:
            masks = [g.edge_mask(p) for p in paths]
            union = 0
            for mask in masks:
                union |= mask
            cache[key] = (paths, masks, union)
    return cache[key]


def _prepare(g: Graph, xs: Sequence[int], cap: int) -> _Problem:
    pairs = list(combinations(sorted(xs), 2))
    cand_pair, cand_mask, cand_path = [], [], []
    edge_cands = [[] for _ in range(g.m)]
    lazy = {}
    for p, (u, v) in enumerate(pairs):
        opts = _pair_options(g, u, v, cap)
        if opts is None:
            lazy[p] = count_geodesics(g, u, v)
            continue
        for path, mask in zip(opts[0], opts[1]):
            ci = len(cand_pair)
            cand_pair.append(p)
            cand_mask.append(mask)
            cand_path.append(path)
            rest = mask
            while rest:
                low = rest & -rest
                edge_cands[low.bit_length() - 1].append(ci)
                rest ^= low
    pair_len = [g.dist[u][v] for u, v in pairs]
    return _Problem(pairs, cand_pair, cand_mask, cand_path, edge_cands, pair_len, lazy)


def _reachable(g: Graph, xs: Sequence[int], cap: int) -> int:
    """Union of the edges of all geodesics between pairs of ``xs``."""
    union = 0
    for u, v in combinations(xs, 2):
        opts = _pair_options(g, u, v, cap)
        if opts is None:
            union |= sum(1 << e for e, edge in enumerate(g.edges)
                         if count_geodesics_through(g, u, v, edge))
        else:
            union |= opts[2]
    return union


def _budget(budget):
    if budget is None:
        env = os.environ.get("SGE_BUDGET")
        return int(env) if env else DEFAULT_BUDGET
    return float("inf") if budget == float("inf") else int(budget)


def decide(g: Graph, xs: Iterable[int], budget=None, cap: int = DEFAULT_GEODESIC_CAP,
           kernel: str | None = None):
    """Run the exact search for the set ``xs``.

    Returns ``(witness_or_None, nodes)``; raises :class:`BudgetExhausted`.
    ``kernel`` forces ``"python"`` or ``"compiled"``; by default the compiled
    kernel is used whenever it is available and the instance fits 64-bit masks.
    """
    xs = sorted(set(xs))
    for x in xs:
        if not 0 <= x < g.n:
            raise ForeignVertex(f"vertex {x} not in graph on {g.n} vertices")
    budget = _budget(budget)
    if g.m == 0:
        return Witness(frozenset(xs), {}), 0
    # an edge on no geodesic between two vertices of xs can never be covered
    if _reachable(g, xs, cap) != (1 << g.m) - 1:
        return None, 0
    prob = _prepare(g, xs, cap)
    m, npairs = g.m, len(prob.pairs)

    fits = m <= 64 and npairs <= 64 and not prob.lazy
    if kernel is None:
        kernel = "compiled" if (_compiled_search is not None and fits) else "python"
    if kernel == "compiled":
        if _compiled_search is None:
            raise RuntimeError("compiled kernel not built")
        if not fits:
            raise ValueError("compiled kernel needs at most 64 edges, 64 pairs and no overflow")
        limit = -1 if budget == float("inf") else budget
        found, chosen, nodes = _compiled_search(
            m, npairs, prob.cand_pair, prob.cand_mask, prob.edge_cands, prob.pair_len, limit
        )
    else:
        lazy = None
        if prob.lazy:
            through = [
                [(p, c) for p in sorted(prob.lazy)
                 if (c := count_geodesics_through(g, *prob.pairs[p], edge))]
                for edge in g.edges
            ]

            def expand(p, e):
                u, v = prob.pairs[p]
                for path in iter_geodesics_through(g, u, v, g.edges[e]):
                    yield g.edge_mask(path), path

            lazy = (through, expand)
        found, chosen, nodes = _search.search(
            m, npairs, prob.cand_pair, prob.cand_mask, prob.edge_cands, prob.pair_len,
            budget, lazy,
        )
    if found is None:
        raise BudgetExhausted(f"no decision within {budget} node expansions", nodes=nodes)
    if not found:
        return None, nodes
    paths = [prob.cand_path[c] if isinstance(c, int) else c[1] for c in chosen]
    return Witness.from_paths(xs, paths), nodes


def is_strong_edge_geodetic(g: Graph, xs: Iterable[int], budget=None, **kw) -> Witness | None:
    """Witness if ``xs`` is a strong edge geodetic set of ``g``, else None.

    Raises :class:`BudgetExhausted` when ``budget`` expansions do not settle it.
    """
    return decide(g, xs, budget, **kw)[0]


def geodesic_count_table(g: Graph, xs: Iterable[int]) -> dict:
    """Geodesic counts for every pair of ``xs`` (diagnostics)."""
    return {(u, v): count_geodesics(g, u, v) for u, v in combinations(sorted(xs), 2)}
