"""Writes every non-isomorphic graph on 1..8 vertices in graph6 format.

Graphs on up to 7 vertices come from the networkx atlas. Each 7-vertex
graph is extended by one vertex in every possible way; duplicates are
removed by nauty canonical labelling.

Requires: networkx, pynauty.
Usage: python3 scripts/gen_graph_data.py data
Writes data/graphs_upto7.g6 (1252 graphs) and data/graphs8.g6 (12346 graphs).
"""

import os

import sys

import networkx as nx
import pynauty

N = 8
EXPECTED = 12346


def certificate(g):
    adj = {v: list(g.neighbors(v)) for v in g.nodes}
    return pynauty.certificate(pynauty.Graph(N, adjacency_dict=adj))


def write(path, graphs):
    lines = sorted(nx.to_graph6_bytes(h, header=False).decode().strip() for h in graphs)
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {path}")


def main(out_dir):
    small = [g for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() < N]
    write(os.path.join(out_dir, "graphs_upto7.g6"), small)
    seen = {}
    base = [g for g in nx.graph_atlas_g() if g.number_of_nodes() == N - 1]
    for g in base:
        for mask in range(1 << (N - 1)):
            h = g.copy()
            h.add_node(N - 1)
            h.add_edges_from((N - 1, v) for v in range(N - 1) if mask >> v & 1)
            seen.setdefault(certificate(h), h)
    if len(seen) != EXPECTED:
        sys.exit(f"expected {EXPECTED} graphs, found {len(seen)}")
    write(os.path.join(out_dir, "graphs8.g6"), seen.values())


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "data")
