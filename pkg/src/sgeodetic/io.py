"""Edge-list, graph6 and witness JSON formats.

Edge list::

    # comments and blank lines are ignored
    n m
    u v        (m lines, 0-based)

Witness JSON::

    {"set": [...], "paths": [{"pair": [u, v], "path": [v0, ..., vl]}, ...]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError
from .graph import Graph, build_graph
from .verifier import Witness


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {raw!r}") from None
    if not rows:
        raise ParseError("empty edge list")
    (n, m), edges = rows[0], rows[1:]
    if len(edges) != m:
        raise ParseError(f"header announces {m} edges, found {len(edges)}")
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    return "".join([f"{g.n} {g.m}\n", *(f"{u} {v}\n" for u, v in g.edges)])


def _g6_size(data: bytes) -> tuple[int, int]:
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 4 and data[1] != 126:
        return ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63), 4
    raise ParseError("graph6 orders above 258047 are not supported")


def parse_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 string (optional ``>>graph6<<`` header)."""
    data = line.encode() if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data or any(not 63 <= c <= 126 for c in data):
        raise ParseError(f"not a graph6 string: {data[:20]!r}")
    n, offset = _g6_size(data)
    bits = []
    for c in data[offset:]:
        v = c - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    need = n * (n - 1) // 2
    if len(bits) < need or len(bits) - need >= 6:
        raise ParseError(f"graph6 payload length does not match order {n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def format_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [n + 63]
    else:
        out = [126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)]
    bits = [1 if g.has_edge(i, j) else 0 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out).decode()


def read_graph6_file(path) -> list[Graph]:
    return [parse_graph6(line) for line in Path(path).read_text().splitlines() if line.strip()]


def read_graph(path) -> Graph:
    """Edge list, or graph6 when the file ends in ``.g6`` or holds one graph6 line."""
    path = Path(path)
    text = path.read_text()
    stripped = text.strip()
    if path.suffix == ".g6" or (stripped and "\n" not in stripped and " " not in stripped
                                and not stripped.isdigit()):
        return parse_graph6(stripped.splitlines()[0])
    return parse_edge_list(text)


def witness_to_json(w: Witness) -> dict:
    return {
        "set": sorted(w.vertices),
        "paths": [{"pair": list(pair), "path": list(path)} for pair, path in sorted(w.paths.items())],
    }


def witness_from_json(obj) -> Witness:
    try:
        vertices = [int(x) for x in obj["set"]]
        paths = {}
        for entry in obj["paths"]:
            u, v = (int(x) for x in entry["pair"])
            key = (u, v) if u <= v else (v, u)
            if key in paths:
                raise ParseError(f"pair {list(key)} assigned twice")
            paths[key] = tuple(int(x) for x in entry["path"])
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"bad witness JSON: {exc}") from None
    return Witness(frozenset(vertices), dict(sorted(paths.items())))


def dumps_witness(w: Witness) -> str:
    return json.dumps(witness_to_json(w), sort_keys=True)


def loads_witness(text: str) -> Witness:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"witness is not JSON: {exc}") from None
    return witness_from_json(obj)
