"""Exact strong edge geodetic number: pruned solver and brute-force oracle."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .errors import BudgetExhausted, InstanceTooLarge
from .graph import Graph, dominant_neighbors, simplicial_vertices, universal_vertices
from .verifier import Witness, _budget, decide, validate_witness

log = logging.getLogger(__name__)

ORACLE_MAX_N = 10


@dataclass
class SgeResult:
    value: int
    optimal_set: tuple
    witness: Witness
    forced: frozenset = frozenset()
    lower_bound_used: int = 0
    nodes: int = 0
    all_optimal: list = field(default_factory=list)

    def to_json(self) -> dict:
        from .io import witness_to_json

        return {
            "value": self.value,
            "optimal_set": list(self.optimal_set),
            "forced": sorted(self.forced),
            "lower_bound_used": self.lower_bound_used,
            "witness": witness_to_json(self.witness),
        }


def colex(subsets):
    return sorted(subsets, key=lambda s: tuple(reversed(s)))


def forced_vertices(g: Graph) -> frozenset[int]:
    """Vertices with a dominant neighbour; they lie in every strong edge geodetic set."""
    return frozenset(u for u in range(g.n) if dominant_neighbors(g, u))


def lower_bound(g: Graph) -> int:
    if g.m == 0:
        return 0  # the empty set covers no edges, which is all of them
    bound = max(len(forced_vertices(g)), len(simplicial_vertices(g)))
    if g.m:
        bound = max(bound, 2)
    if universal_vertices(g):
        bound = max(bound, g.n - 1)
    return bound


def sge_equals_n(g: Graph) -> bool:
    """True iff every vertex has a dominant neighbour, i.e. sg_e(G) = n(G)."""
    return all(dominant_neighbors(g, u) for u in range(g.n))


def _seed_upper(g: Graph):
    """Witness from a known construction when ``g`` carries a family tag."""
    from . import constructions

    tag = g.provenance
    if not tag:
        return None
    try:
        w = constructions.construct_for_tag(tag)
    except (ValueError, KeyError):
        return None
    if w is None or not validate_witness(g, w).valid:
        return None
    return w


def _sweep_chunk(args):
    g, subsets, budget = args
    used = 0
    for rank, xs in enumerate(subsets):
        try:
            w, nodes = decide(g, xs, budget - used)
        except BudgetExhausted as exc:
            return None, None, used + exc.nodes, True
        used += nodes
        if w is not None:
            return rank, w, used, False
    return None, None, used, False


def sge_exact(g: Graph, budget=None, threads: int = 1, seed: bool = True) -> SgeResult:
    """Smallest strong edge geodetic set by size sweep over supersets of the forced set.

    Sizes run upward from :func:`lower_bound`; within a size, candidate sets
    are tried in colex order of their non-forced part and the first success
    is returned. ``budget`` caps the node expansions across the whole sweep;
    when it runs out :class:`BudgetExhausted` carries the proven interval.
    """
    budget = _budget(budget)
    forced = forced_vertices(g)
    lb = lower_bound(g)
    upper = g.n
    if seed:
        w = _seed_upper(g)
        if w is not None:
            upper = min(upper, len(w))
    free = [v for v in range(g.n) if v not in forced]
    used = 0
    for k in range(lb, g.n + 1):
        need = k - len(forced)
        if need < 0:
            continue
        subsets = [tuple(sorted(forced.union(c))) for c in colex(combinations(free, need))]
        if threads > 1 and len(subsets) > threads:
            step = -(-len(subsets) // threads)
            chunks = [subsets[i:i + step] for i in range(0, len(subsets), step)]
            with ProcessPoolExecutor(threads) as pool:
                outs = list(pool.map(_sweep_chunk, [(g, c, budget - used) for c in chunks]))
            hit = None
            for ci, (rank, w, nodes, exhausted) in enumerate(outs):
                used += nodes
                if hit is None and exhausted:
                    raise BudgetExhausted(
                        f"budget {budget} exhausted at size {k}", lower=k, upper=upper, nodes=used)
                if hit is None and rank is not None:
                    hit = (chunks[ci][rank], w)
        else:
            rank, w, nodes, exhausted = _sweep_chunk((g, subsets, budget - used))
            used += nodes
            if exhausted:
                raise BudgetExhausted(
                    f"budget {budget} exhausted at size {k}", lower=k, upper=upper, nodes=used)
            hit = (subsets[rank], w) if rank is not None else None
        if hit is not None:
            log.debug("sg_e=%d found after %d nodes", k, used)
            return SgeResult(k, hit[0], hit[1], forced, lb, used)
    raise AssertionError("the full vertex set is always strong edge geodetic")


# -- brute-force oracle -----------------------------------------------------


def _oracle_distances(g: Graph):
    # Floyd-Warshall; deliberately independent of the BFS used elsewhere
    inf = g.n + 1
    d = [[0 if i == j else (1 if g.has_edge(i, j) else inf) for j in range(g.n)] for i in range(g.n)]
    for k in range(g.n):
        dk = d[k]
        for i in range(g.n):
            dik = d[i][k]
            row = d[i]
            for j in range(g.n):
                if dik + dk[j] < row[j]:
                    row[j] = dik + dk[j]
    return d


def _oracle_geodesics(g: Graph, d, u, v):
    # every walk of length d(u, v) from u that ends at v
    out = []

    def walk(path):
        if len(path) == d[u][v] + 1:
            if path[-1] == v:
                out.append(tuple(path))
            return
        for w in g.adj[path[-1]]:
            walk(path + [w])

    walk([u])
    return sorted(out)


def naive_decide(g: Graph, xs, _dist=None) -> Witness | None:
    """Exhaustive check over all assignments of one or zero geodesics per pair.

    The assignments are expanded pair by pair as the set of distinct coverage
    masks reachable so far. A mask is dropped once it misses an edge that no
    later pair could still cover; nothing else is cut. Knows nothing about
    branching order, rarity, structural pruning or budgets.
    """
    xs = sorted(xs)
    d = _dist or _oracle_distances(g)
    full = (1 << g.m) - 1
    pairs = list(combinations(xs, 2))
    options = [[(g.edge_mask(p), p) for p in _oracle_geodesics(g, d, u, v)] for u, v in pairs]
    last = {e: -1 for e in range(g.m)}
    for i, opts in enumerate(options):
        for mask, _ in opts:
            for e in range(g.m):
                if mask >> e & 1:
                    last[e] = i
    settled = [0] * (len(pairs) + 1)  # settled[i]: edges no pair >= i can cover
    for e, i in last.items():
        settled[i + 1] |= 1 << e
    for i in range(1, len(settled)):
        settled[i] |= settled[i - 1]
    if settled[0]:
        return None
    layers = [{0: None}]
    for i, opts in enumerate(options):
        need = settled[i + 1]
        nxt = {}
        for state in layers[-1]:
            if state & need == need:
                nxt.setdefault(state, None)  # zero paths for this pair
            for mask, path in opts:
                new = state | mask
                if new & need == need and new not in nxt:
                    nxt[new] = (state, path)
        if not nxt:
            return None
        layers.append(nxt)
    if full not in layers[-1]:
        return None
    chosen, state = [], full
    for layer in reversed(layers[1:]):
        back = layer[state]
        if back is not None:
            state, path = back
            chosen.append(path)
    return Witness.from_paths(xs, chosen)


def sge_oracle(g: Graph, max_n: int = ORACLE_MAX_N, all_optimal: bool = False) -> SgeResult:
    """sg_e by trying every subset in size order with :func:`naive_decide`.

    With ``all_optimal`` the whole optimal size is swept and every optimal
    set is listed in ``all_optimal``.
    """
    if g.n > max_n:
        raise InstanceTooLarge(f"oracle limited to {max_n} vertices, got {g.n}")
    dist = _oracle_distances(g)
    for k in range(g.n + 1):
        found = []
        for xs in colex(combinations(range(g.n), k)):
            w = naive_decide(g, xs, dist)
            if w is not None:
                found.append((xs, w))
                if not all_optimal:
                    break
        if found:
            xs, w = found[0]
            return SgeResult(k, xs, w, all_optimal=[f[0] for f in found])
    raise AssertionError("unreachable")
