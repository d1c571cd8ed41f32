#!/usr/bin/env python3
"""Regenerate data/connected_2_6.g6.

Emits every connected graph on 2..6 vertices (one graph6 record per line),
sorted by (vertex count, edge count, graph6 string).  Uses the networkx
atlas, which covers all graphs up to 7 vertices.
"""

import sys
from pathlib import Path

import networkx as nx
from networkx.generators.atlas import graph_atlas_g


def main() -> int:
    out = Path(__file__).resolve().parent.parent / "data" / "connected_2_6.g6"
    records = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if n < 2 or n > 6:
            continue
        if not nx.is_connected(g):
            continue
        relabeled = nx.convert_node_labels_to_integers(g, ordering="sorted")
        s = nx.to_graph6_bytes(relabeled, header=False).decode().strip()
        records.append((n, g.number_of_edges(), s))

    records.sort()
    lines = [s for (_, _, s) in records]
    if len(lines) != len(set(lines)):
        print("duplicate graph6 records in corpus", file=sys.stderr)
        return 1
    out.write_text("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
