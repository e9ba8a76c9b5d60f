"""Witness generators for the complete multipartite and P_n □ K_m families.

Each generator returns the graph, the chosen vertex set and an explicit
pair-to-geodesic assignment. The assignments are meant to be run through
:func:`sgeodetic.verifier.validate_witness`; nothing here checks coverage.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import OddOrder, PartTooSmall
from .families import complete_bipartite, complete_graph, complete_multipartite, path_times_complete
from .formulas import MultipartiteSpec, PrismSpec
from .graph import Graph, edge_key
from .verifier import Witness


@dataclass(frozen=True)
class EdgeColoring:
    n: int
    color: dict

    def classes(self) -> list[list[tuple[int, int]]]:
        out = [[] for _ in range(max(self.n - 1, 1))]
        for e, c in sorted(self.color.items()):
            out[c].append(e)
        return out

    def is_proper(self) -> bool:
        seen = set()
        for (i, j), c in self.color.items():
            if (i, c) in seen or (j, c) in seen:
                return False
            seen.add((i, c))
            seen.add((j, c))
        return True


@dataclass(frozen=True)
class Construction:
    graph: Graph
    vertices: frozenset
    witness: Witness


def one_factorization(n: int) -> EdgeColoring:
    """Proper (n-1)-edge-colouring of K_n for even n.

    c(ij) = (i + j) mod (n - 1) for i, j <= n - 2 and c(i, n-1) = 2i mod (n - 1).
    """
    if n < 2 or n % 2:
        raise OddOrder(f"1-factorization needs an even order >= 2, got {n}")
    q = n - 1
    color = {}
    for i, j in combinations(range(n - 1), 2):
        color[(i, j)] = (i + j) % q
    for i in range(n - 1):
        color[(i, n - 1)] = (2 * i) % q
    return EdgeColoring(n, color)


def _bipartite_paths(xs, ys):
    """Paths covering K(xs, ys), len(xs) >= len(ys) >= 2, using all of xs.

    Returns ``(extra, paths)`` where ``extra`` are the vertices of ``ys`` that
    must join the set.
    """
    n, m = len(xs), len(ys)
    if n % 2 == 0:
        coloring = one_factorization(n).classes()
        extra, paths = [], []
        if n == m:
            extra = [ys[-1]]
            paths += [(x, ys[-1]) for x in xs]
            ys = ys[:-1]
        for j, y in enumerate(ys):
            paths += [(xs[i], y, xs[k]) for i, k in coloring[j]]
        return extra, paths

    last = xs[-1]
    if n == m:
        extra, paths = _bipartite_paths(xs[:-1], ys[:-1])
        extra = extra + [ys[-1]]
        paths += [(ys[-1], x) for x in xs]
        paths += [(last, ys[i], xs[i]) for i in range(n - 1)]
    else:
        extra, paths = _bipartite_paths(xs[:-1], ys)
        paths += [(last, ys[i], xs[i]) for i in range(m)]
    return extra, paths


def construct_bipartite(n: int, m: int) -> Construction:
    """K_{n,m} (X = 0..n-1, Y = n..n+m-1) with a witness of formula size."""
    if n < m:
        n, m = m, n
    if m < 2:
        raise PartTooSmall(f"K_{{n,m}} construction requires both sides >= 2, got ({n}, {m})")
    g = complete_bipartite(n, m)
    xs = list(range(n))
    ys = list(range(n, n + m))
    extra, paths = _bipartite_paths(xs, ys)
    vertices = frozenset(xs + extra)
    return Construction(g, vertices, Witness.from_paths(vertices, paths))


def construct_multipartite(spec) -> Construction:
    """K_{n_1,...,n_k} (parts ascending, laid out consecutively)."""
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(tuple(spec))
    parts = spec.parts
    g = complete_multipartite(parts)
    blocks, start = [], 0
    for size in parts:
        blocks.append(list(range(start, start + size)))
        start += size
    first = blocks[0]
    extra, paths = set(), []
    for block in blocks[1:]:
        more, ps = _bipartite_paths(block, first)
        extra.update(more)
        paths += ps
    for a, b in combinations(blocks[1:], 2):
        paths += [(x, y) for x in a for y in b]
    vertices = frozenset(v for block in blocks[1:] for v in block) | extra
    return Construction(g, vertices, Witness.from_paths(vertices, paths))


class _PathBook:
    """Ordered pair -> path assignment that skips already assigned pairs."""

    def __init__(self):
        self.paths = {}
        self.skipped = 0

    def add(self, path):
        path = tuple(path)
        if len(path) < 2:
            return
        key = edge_key(path[0], path[-1])
        if key in self.paths:
            self.skipped += 1
            return
        self.paths[key] = path


def construct_prism(n: int, m: int) -> Construction:
    """P_n □ K_m with the square-column witness.

    Coordinates are 1-based (column i in 1..n, layer j in 1..m) and stored at
    index (i - 1) * m + (j - 1).
    """
    spec = PrismSpec(n, m)
    k, h = spec.k, spec.h
    g = path_times_complete(n, m)

    def vid(i, j):
        return (i - 1) * m + (j - 1)

    def layer(j, a, b):
        step = 1 if b >= a else -1
        return [vid(i, j) for i in range(a, b + step, step)]

    def cross(a, ya, c, yb, b):
        # along layer ya from column a to c, switch to yb, continue to column b
        return layer(ya, a, c) + layer(yb, c, b)

    squares = [i * i for i in range(1, k + 1)]
    vertices = {vid(s, j) for s in squares for j in range(1, m + 1)}
    book = _PathBook()
    for j in range(1, m + 1):
        book.add(layer(j, 1, k * k))
    for y1, y2 in combinations(range(1, m + 1), 2):
        for s in squares:
            book.add([vid(s, y1), vid(s, y2)])
        for i in range(2, k + 1):
            for l in range(1, i):
                book.add(cross(l * l, y1, (i - 1) ** 2 + l, y2, i * i))
                book.add(cross(l * l, y2, i * (i - 1) + l, y1, i * i))

    if 1 <= h <= k:
        vertices |= {vid(n, j) for j in range(2, m + 1)}
        for y1, y2 in combinations(range(1, m + 1), 2):
            for i in range(1, h + 1):
                book.add(cross(i * i, y1, k * k + i, y2, n))
        for y in range(2, m + 1):
            book.add(layer(y, 1, n))
    elif h > k:
        vertices |= {vid(n, j) for j in range(1, m + 1)}
        for y1, y2 in combinations(range(1, m + 1), 2):
            for i in range(1, k + 1):
                book.add(cross(i * i, y1, k * k + i, y2, n))
            for i in range(1, h - k + 1):
                book.add(cross(n, y1, k * (k + 1) + i, y2, i * i))
        for j in range(1, m + 1):
            book.add(layer(j, 1, n))

    vertices = frozenset(vertices)
    return Construction(g, vertices, Witness(vertices, dict(sorted(book.paths.items()))))


def construct_complete(n: int) -> Construction:
    g = complete_graph(n)
    vertices = frozenset(range(n)) if n > 1 else frozenset()
    return Construction(g, vertices, Witness.from_paths(vertices, g.edges))


def construct_for_tag(tag) -> Witness | None:
    """Witness for a graph produced by :mod:`sgeodetic.families`, if known."""
    family, *params = tag
    if family == "bipartite":
        n, m = params
        if n < m:
            return None
        return construct_bipartite(n, m).witness
    if family == "multipartite":
        if list(params) != sorted(params):
            return None
        return construct_multipartite(params).witness
    if family == "prism":
        return construct_prism(*params).witness
    if family == "complete":
        return construct_complete(*params).witness
    return None
