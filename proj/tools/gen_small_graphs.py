#!/usr/bin/env python3
"""Writes the small-graph fixture corpus used by the engine oracle suites.

All graphs on 1..7 vertices come from the networkx atlas; the 8-vertex
graphs are produced by one-vertex extension of the 7-vertex graphs and
deduplicated up to isomorphism.  Output is graph6 as written by networkx,
which keeps the corpus independent of this project's encoder.
"""
import itertools
import sys

import networkx as nx


def g6(g):
    return nx.to_graph6_bytes(g, header=False).decode().strip()


def main(out_dir):
    atlas = nx.graph_atlas_g()[1:]
    with open(f"{out_dir}/graphs_upto7.g6", "w") as f:
        for g in atlas:
            f.write(g6(g) + "\n")

    seven = [g for g in atlas if g.number_of_nodes() == 7]
    buckets = {}
    found = []
    for g in seven:
        for r in range(8):
            for nbrs in itertools.combinations(range(7), r):
                h = g.copy()
                h.add_node(7)
                h.add_edges_from((7, v) for v in nbrs)
                key = (h.number_of_edges(),
                       tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(h, o) for o in bucket):
                    continue
                bucket.append(h)
                found.append(h)
    with open(f"{out_dir}/graphs_n8.g6", "w") as f:
        for g in found:
            f.write(g6(g) + "\n")
    print(len(atlas), len(found))

    with open(f"{out_dir}/petersen.s6", "w") as f:
        f.write(nx.to_sparse6_bytes(nx.petersen_graph(), header=False).decode())
    with open(f"{out_dir}/petersen.g6", "w") as f:
        f.write(g6(nx.petersen_graph()) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
