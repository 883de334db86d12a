"""Exhaustive generation of connected graphs up to isomorphism (small n).

Every connected graph on n vertices contains a non-cut vertex, so each
isomorphism class arises from some class on n-1 vertices by attaching one
new vertex to a nonempty neighbour subset; deduplicating those candidates
is therefore complete."""
import random

from czdglab.graphs import Graph, is_isomorphic
from czdglab.rings import iter_bits


def _invariant_key(g: Graph):
    degs = sorted(g.degree(v) for v in range(g.n))
    nbr_profile = sorted(
        tuple(sorted(g.degree(u) for u in iter_bits(g.adj[v]))) for v in range(g.n)
    )
    return (g.edge_count(), tuple(degs), tuple(nbr_profile))


def connected_graphs_up_to_iso(max_n: int) -> dict[int, list[Graph]]:
    """All connected graphs with 1..max_n vertices, one per isomorphism class."""
    by_n: dict[int, list[Graph]] = {1: [Graph(1, [])]}
    for n in range(2, max_n + 1):
        buckets: dict[tuple, list[Graph]] = {}
        reps: list[Graph] = []
        for base in by_n[n - 1]:
            base_edges = list(base.edges())
            for mask in range(1, 1 << (n - 1)):
                extra = [(u, n - 1) for u in range(n - 1) if (mask >> u) & 1]
                g = Graph(n, base_edges + extra)
                key = _invariant_key(g)
                bucket = buckets.setdefault(key, [])
                if any(is_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                reps.append(g)
        by_n[n] = reps
    return by_n


def random_connected_graph(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    while True:
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
        ]
        g = Graph(n, edges)
        if g.is_connected():
            return g
