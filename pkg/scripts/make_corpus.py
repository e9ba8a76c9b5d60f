"""Write the connected-graph census corpus (graph6, one file per order).

Uses the networkx graph atlas, which lists every graph on up to 7 vertices
once up to isomorphism.
"""

import sys
from pathlib import Path

import networkx as nx


def main(out_dir="tests/data"):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    by_order = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n >= 1 and nx.is_connected(g):
            by_order.setdefault(n, []).append(g)
    for n, graphs in sorted(by_order.items()):
        lines = [nx.to_graph6_bytes(g, header=False).decode().strip() for g in graphs]
        (out / f"connected{n}.g6").write_text("\n".join(lines) + "\n")
        print(n, len(lines))


if __name__ == "__main__":
    main(*sys.argv[1:])
