"""Closed-form strong edge geodetic numbers for the resolved graph families."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import CliqueTooSmall, NotApplicable, PartTooSmall
from .graph import Graph, universal_vertices


@dataclass(frozen=True)
class MultipartiteSpec:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted(int(p) for p in self.parts))
        if len(parts) < 2:
            raise PartTooSmall("complete multipartite formula needs at least two parts")
        if parts[0] < 2:
            raise PartTooSmall(f"every part must have at least 2 vertices, got {list(parts)}")
        object.__setattr__(self, "parts", parts)


@dataclass(frozen=True)
class PrismSpec:
    """P_n □ K_m with n = k^2 + h, 0 <= h <= 2k."""

    n: int
    m: int

    def __post_init__(self):
        if self.m < 3:
            raise CliqueTooSmall(f"P_n □ K_m formula requires m >= 3, got m={self.m}")
        if self.n < 2:
            raise ValueError(f"P_n □ K_m formula requires n >= 2, got n={self.n}")

    @property
    def k(self) -> int:
        return isqrt(self.n)

    @property
    def h(self) -> int:
        return self.n - self.k**2


def sge_complete_bipartite(n: int, m: int) -> int:
    if n < m:
        n, m = m, n
    if m < 2:
        raise PartTooSmall(f"K_{{n,m}} formula requires both sides >= 2, got ({n}, {m})")
    if n % 2 == 0:
        return n + 1 if n == m else n
    if n == m:
        return n + 2
    if n == m + 1:
        return n + 1
    return n


def sge_complete_multipartite(spec) -> int:
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(tuple(spec))
    n1, n2 = spec.parts[:2]
    s = sum(spec.parts[1:])
    if n1 % 2 == 0:
        return s + 1 if n2 in (n1, n1 + 1) else s
    return s + 2 if n2 == n1 else s


def sge_path_times_complete(spec) -> int:
    if not isinstance(spec, PrismSpec):
        spec = PrismSpec(*spec)
    k, h, m = spec.k, spec.h, spec.m
    if h == 0:
        return m * k
    if h <= k:
        return m * k + (m - 1)
    return m * k + m


def sge_complete(n: int) -> int:
    """sg_e(K_n) = n; K_1 has no edges and gets 0."""
    if n < 1:
        raise ValueError("K_n needs n >= 1")
    return 0 if n == 1 else n


def sge_single_universal(g: Graph) -> int:
    """n - 1 for graphs with exactly one universal vertex."""
    univ = universal_vertices(g)
    if len(univ) != 1:
        raise NotApplicable(f"graph has {len(univ)} universal vertices, need exactly one")
    return g.n - 1
