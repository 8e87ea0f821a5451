"""Regenerate tests/data/graphs8.g6: every graph on 8 vertices up to isomorphism.

Each 8-vertex graph minus its last vertex is isomorphic to some 7-vertex
graph, so extending the networkx atlas graphs on 7 vertices by one vertex in
every possible way reaches every class; duplicates are removed with a
Weisfeiler-Lehman hash and an exact isomorphism test.
"""

import sys
from itertools import combinations

import networkx as nx

EXPECTED = 12346


def main(path):
    buckets = {}
    for base in nx.graph_atlas_g():
        if base.number_of_nodes() != 7:
            continue
        for r in range(8):
            for nbrs in combinations(range(7), r):
                h = base.copy()
                h.add_node(7)
                h.add_edges_from((7, v) for v in nbrs)
                key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())),
                       nx.weisfeiler_lehman_graph_hash(h, iterations=3))
                bucket = buckets.setdefault(key, [])
                if not any(nx.is_isomorphic(h, o) for o in bucket):
                    bucket.append(h)
    graphs = [g for key in sorted(buckets) for g in buckets[key]]
    if len(graphs) != EXPECTED:
        raise SystemExit(f"found {len(graphs)} graphs, expected {EXPECTED}")
    with open(path, "w") as fh:
        for g in graphs:
            fh.write(nx.to_graph6_bytes(g, header=False).decode().strip() + "\n")
    print(len(graphs))


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/graphs8.g6")
