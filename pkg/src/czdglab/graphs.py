"""Small undirected graphs on integer vertices, adjacency as int bitsets."""
from __future__ import annotations

import math

import numpy as np

from .errors import MalformedGraphFile, TooLarge
from .rings import iter_bits

_ISO_MAX_VERTICES = 12


class Graph:
    """Undirected simple graph; vertex i's neighbourhood is the bitset adj[i]."""

    def __init__(self, n: int, edges=()):
        self.n = n
        self.adj = [0] * n
        for u, v in edges:
            self.add_edge(u, v)

    def add_edge(self, u: int, v: int):
        if u == v:
            raise ValueError("self-loops are not allowed")
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError("edge endpoint out of range")
        self.adj[u] |= 1 << v
        self.adj[v] |= 1 << u

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self):
        for u in range(self.n):
            for v in iter_bits(self.adj[u]):
                if v > u:
                    yield (u, v)

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    # -- metrics -----------------------------------------------------------

    def bfs_distances(self, source: int) -> list[float]:
        dist = [math.inf] * self.n
        dist[source] = 0
        frontier = 1 << source
        visited = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= self.adj[v]
            nxt &= ~visited
            for v in iter_bits(nxt):
                dist[v] = d
            visited |= nxt
            frontier = nxt
        return dist

    def all_pairs_distances(self) -> np.ndarray:
        """Distance matrix as float64; unreachable pairs are inf."""
        out = np.empty((self.n, self.n), dtype=np.float64)
        for v in range(self.n):
            out[v] = self.bfs_distances(v)
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return False
        if self.n == 1:
            return True
        return all(d < math.inf for d in self.bfs_distances(0))

    def diameter(self):
        """Longest shortest-path distance; inf when disconnected."""
        best = 0
        for v in range(self.n):
            row = self.bfs_distances(v)
            m = max(row)
            if m == math.inf:
                return math.inf
            best = max(best, int(m))
        return best

    def girth(self):
        """Length of a shortest cycle; inf for forests."""
        best = math.inf
        for root in range(self.n):
            dist = [-1] * self.n
            parent = [-1] * self.n
            dist[root] = 0
            queue = [root]
            while queue:
                nxt = []
                for u in queue:
                    for w in iter_bits(self.adj[u]):
                        if dist[w] == -1:
                            dist[w] = dist[u] + 1
                            parent[w] = u
                            nxt.append(w)
                        elif w != parent[u]:
                            best = min(best, dist[u] + dist[w] + 1)
                queue = nxt
        return best

    # -- structure tests ------------------------------------------------------

    def is_complete(self) -> bool:
        full = (1 << self.n) - 1
        return all(self.adj[v] == full ^ (1 << v) for v in range(self.n))

    def is_regular(self) -> bool:
        degs = {self.degree(v) for v in range(self.n)}
        return len(degs) <= 1

    def nonadjacency_classes(self) -> list[list[int]] | None:
        """Partition into independent parts with all cross edges present
        (i.e. a complete multipartite witness), or None."""
        full = (1 << self.n) - 1
        seen = 0
        classes = []
        for v in range(self.n):
            if (seen >> v) & 1:
                continue
            cls = (full & ~self.adj[v])  # v plus its non-neighbours
            for u in iter_bits(cls):
                if full & ~self.adj[u] != cls:
                    return None
            classes.append(sorted(iter_bits(cls)))
            seen |= cls
        for cls in classes:
            for u in cls:
                for w in cls:
                    if u != w and self.has_edge(u, w):
                        return None
        return classes

    def complete_bipartite_parts(self) -> tuple[int, int] | None:
        classes = self.nonadjacency_classes()
        if classes is None or len(classes) != 2:
            return None
        a, b = sorted(len(c) for c in classes)
        return (a, b)

    def classify_family(self) -> set[str]:
        """All matching family tags, e.g. {'Cycle(4)', 'CompleteBipartite(2,2)'}
        for the 4-cycle; {'Other'} when no family matches."""
        n = self.n
        tags: set[str] = set()
        if n == 0:
            return tags
        degs = sorted(self.degree(v) for v in range(n))
        connected = self.is_connected()
        if n == 1:
            tags.add("SingleVertex")
        if self.is_complete():
            tags.add(f"Complete({n})")
        if connected and self.edge_count() == n - 1:
            # a connected tree with max degree <= 2 is a path
            if degs[-1] <= 2:
                tags.add(f"Path({n})")
            # one centre adjacent to all, every other vertex a leaf
            if n == 1 or (degs[-1] == n - 1 and all(d == 1 for d in degs[:-1])):
                tags.add(f"Star({n})")
        if connected and n >= 3 and all(d == 2 for d in degs):
            tags.add(f"Cycle({n})")
        parts = self.complete_bipartite_parts()
        if parts is not None:
            tags.add(f"CompleteBipartite({parts[0]},{parts[1]})")
        if not tags:
            tags.add("Other")
        return tags

    def to_dot(self, labels=None, tooltips=None, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            attrs = []
            label = labels[v] if labels else str(v)
            attrs.append(f'label="{label}"')
            if tooltips and tooltips[v]:
                attrs.append(f'tooltip="{tooltips[v]}"')
            lines.append(f"  v{v} [{', '.join(attrs)}];")
        for u, v in sorted(self.edges()):
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


# -- isomorphism -----------------------------------------------------------------


def _neighbour_degree_profile(g: Graph):
    return [
        (g.degree(v), sorted(g.degree(u) for u in iter_bits(g.adj[v])))
        for v in range(g.n)
    ]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test for graphs up to 12 vertices."""
    if g.n != h.n:
        return False
    if g.edge_count() != h.edge_count():
        return False
    pg, ph = _neighbour_degree_profile(g), _neighbour_degree_profile(h)
    if sorted(pg) != sorted(ph):
        return False
    if g.n > _ISO_MAX_VERTICES:
        raise TooLarge(
            f"isomorphism test supports at most {_ISO_MAX_VERTICES} vertices"
        )
    order = sorted(range(g.n), key=lambda v: (-pg[v][0], pg[v][1]))
    mapping = [-1] * g.n
    used = 0

    def extend(k: int) -> bool:
        nonlocal used
        if k == len(order):
            return True
        v = order[k]
        for w in range(h.n):
            if (used >> w) & 1 or pg[v] != ph[w]:
                continue
            ok = True
            for prev in order[:k]:
                if g.has_edge(v, prev) != h.has_edge(w, mapping[prev]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used |= 1 << w
                if extend(k + 1):
                    return True
                used ^= 1 << w
                mapping[v] = -1
        return False

    return extend(0)


# -- factories --------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: one centre joined to n-1 leaves."""
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite_graph(m: int, n: int) -> Graph:
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def graph_from_edge_list_text(text: str) -> Graph:
    """Parse a graph file: the first non-comment line is the vertex count,
    each following line is one zero-based edge 'u v'.  '#' starts a comment."""
    n = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if not all(p.lstrip("-").isdigit() for p in parts):
            raise MalformedGraphFile(f"line {lineno}: non-integer token")
        if n is None:
            if len(parts) != 1:
                raise MalformedGraphFile(
                    f"line {lineno}: first line must be the vertex count"
                )
            n = int(parts[0])
            if n < 0:
                raise MalformedGraphFile(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise MalformedGraphFile(f"line {lineno}: expected an edge 'u v'")
        u, v = (int(p) for p in parts)
        if not (0 <= u < n and 0 <= v < n):
            raise MalformedGraphFile(
                f"line {lineno}: vertex out of range 0..{n - 1}"
            )
        if u == v:
            raise MalformedGraphFile(f"line {lineno}: self-loop")
        pairs.append((u, v))
    if n is None:
        raise MalformedGraphFile("empty graph file")
    return Graph(n, pairs)
