"""Exact solvers for dominating number, metric dimension, and dominant
metric dimension.

All three reduce to one minimum set-cover shape: candidates are vertices;
items are vertices to dominate (closed neighbourhoods), vertex pairs to
distinguish (distance vectors), or both.  A branch-and-bound over that
instance gives exact optima with deterministic witnesses; a separate
brute-force oracle double-checks small graphs.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import Disconnected, Infeasible, TooLarge, UndefinedForEmptyGraph
from .graphs import Graph
from .rings import iter_bits

MODES = ("gamma", "dim", "ddim")

_ORACLE_MAX_VERTICES = 20
_PAIR_CHUNK = 1 << 16  # byte-aligned pair-item chunk


@dataclass
class CoverInstance:
    """Minimum set cover: pick fewest candidates covering all items."""

    n_candidates: int
    item_coverers: list[int]  # per item, bitset of covering candidates
    candidate_cover: list[int]  # per candidate, bitset of covered items
    twin_classes: list[tuple[int, ...]] | None = None


@dataclass
class SolveResult:
    mode: str
    optimum: int
    witness: tuple[int, ...]
    explored_nodes: int
    elapsed_s: float


# -- instance construction -----------------------------------------------------


def _mutual_twin_classes(dist: np.ndarray) -> list[tuple[int, ...]]:
    """Group vertices whose distance rows agree everywhere off {u, v}.

    Only u and v themselves can distinguish such a pair, so any resolving
    set takes at least k-1 vertices from a class of k pairwise twins.
    """
    n = dist.shape[0]
    mutual: set[tuple[int, int]] = set()
    for u in range(n):
        du = dist[u]
        for v in range(u + 1, n):
            diff = du != dist[v]
            diff[u] = diff[v] = False
            if not diff.any():
                mutual.add((u, v))
    assigned = [False] * n
    classes = []
    for u in range(n):
        if assigned[u]:
            continue
        cls = [u]
        assigned[u] = True
        for v in range(u + 1, n):
            if assigned[v]:
                continue
            if all((min(w, v), max(w, v)) in mutual for w in cls):
                cls.append(v)
                assigned[v] = True
        if len(cls) > 1:
            classes.append(tuple(cls))
    return classes


def build_cover_instance(dist: np.ndarray, mode: str) -> CoverInstance:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    n = dist.shape[0]
    covers = [0] * n
    item_coverers: list[int] = []

    n_pair_items = 0
    if mode in ("dim", "ddim"):
        iu, ju = np.triu_indices(n, 1)
        n_pair_items = len(iu)
        # chunked so the (candidate x pair) boolean block stays bounded;
        # chunks are byte-aligned, so per-candidate bytes concatenate
        cand_bytes = [bytearray() for _ in range(n)]
        for start in range(0, n_pair_items, _PAIR_CHUNK):
            sl = slice(start, min(start + _PAIR_CHUNK, n_pair_items))
            block = dist[:, iu[sl]] != dist[:, ju[sl]]
            packed_items = np.packbits(block.T, axis=1, bitorder="little")
            item_coverers.extend(
                int.from_bytes(row.tobytes(), "little") for row in packed_items
            )
            packed_cands = np.packbits(block, axis=1, bitorder="little")
            for w in range(n):
                cand_bytes[w] += packed_cands[w].tobytes()
        for w in range(n):
            covers[w] = int.from_bytes(cand_bytes[w], "little")
    if mode in ("gamma", "ddim"):
        # dist is symmetric, so row v serves both as the coverer set of
        # the domination item v and as candidate v's coverage
        packed_dom = np.packbits(dist <= 1, axis=1, bitorder="little")
        dom_rows = [int.from_bytes(packed_dom[v].tobytes(), "little") for v in range(n)]
        item_coverers.extend(dom_rows)
        for w in range(n):
            covers[w] |= dom_rows[w] << n_pair_items

    twins = (
        _mutual_twin_classes(dist) if mode in ("dim", "ddim") else None
    )
    return CoverInstance(n, item_coverers, covers, twins)


# -- branch and bound ------------------------------------------------------------


def solve_cover(inst: CoverInstance, mode: str = "gamma") -> SolveResult:
    t0 = time.perf_counter()
    n_items = len(inst.item_coverers)
    all_items = (1 << n_items) - 1 if n_items else 0

    if any(c == 0 for c in inst.item_coverers):
        raise Infeasible("an item has no covering candidate")

    # Twin preprocessing: swapping two mutual twins is a graph automorphism,
    # so the k-1 class members any resolving set must contain can be taken
    # to be the first k-1.  Forcing them keeps some optimum reachable and
    # removes the exponential churn of trying equivalent twin subsets.
    forced: list[int] = []
    for cls in inst.twin_classes or ():
        forced.extend(sorted(cls)[:-1])
    forced.sort()
    start_uncovered = all_items
    for c in forced:
        start_uncovered &= ~inst.candidate_cover[c]

    # greedy upper bound on top of the forced prefix: max coverage gain,
    # ties to the smallest index
    uncovered = start_uncovered
    greedy = list(forced)
    while uncovered:
        best_c, best_gain = -1, 0
        for c in range(inst.n_candidates):
            gain = (inst.candidate_cover[c] & uncovered).bit_count()
            if gain > best_gain:
                best_c, best_gain = c, gain
        greedy.append(best_c)
        uncovered &= ~inst.candidate_cover[best_c]

    best_size = len(greedy)
    best_witness = tuple(sorted(greedy))

    static_count = [(c.bit_count(), it) for it, c in enumerate(inst.item_coverers)]
    branch_order = sorted(range(n_items), key=lambda it: static_count[it])

    explored = 0

    def lower_bound(uncovered: int, chosen_len: int) -> int:
        """Count uncovered items with pairwise-disjoint coverer sets."""
        cutoff = best_size - chosen_len  # prune once the bound reaches this
        used = 0
        lb = 0
        rem = uncovered
        while rem:
            low = rem & -rem
            it = low.bit_length() - 1
            rem ^= low
            cov = inst.item_coverers[it]
            if cov & used == 0:
                lb += 1
                if lb >= cutoff:
                    break
                used |= cov
        return lb

    def search(chosen: list[int], uncovered: int):
        nonlocal best_size, best_witness, explored
        explored += 1
        if not uncovered:
            if len(chosen) < best_size:
                best_size = len(chosen)
                best_witness = tuple(sorted(chosen))
            return
        if len(chosen) + max(1, lower_bound(uncovered, len(chosen))) >= best_size:
            return
        item = next(it for it in branch_order if (uncovered >> it) & 1)
        cands = sorted(
            iter_bits(inst.item_coverers[item]),
            key=lambda c: (-(inst.candidate_cover[c] & uncovered).bit_count(), c),
        )
        for c in cands:
            chosen.append(c)
            search(chosen, uncovered & ~inst.candidate_cover[c])
            chosen.pop()

    if n_items:
        search(list(forced), start_uncovered)
    else:
        best_size, best_witness = 0, ()

    return SolveResult(
        mode, best_size, best_witness, explored, time.perf_counter() - t0
    )


# -- graph-level entry points ------------------------------------------------------


def dominating_number(graph: Graph) -> SolveResult:
    dist = graph.all_pairs_distances()
    return solve_cover(build_cover_instance(dist, "gamma"), "gamma")


def metric_dimension(graph: Graph) -> SolveResult:
    if not graph.is_connected():
        raise Disconnected("metric dimension needs a connected graph")
    dist = graph.all_pairs_distances()
    return solve_cover(build_cover_instance(dist, "dim"), "dim")


def dominant_metric_dimension(graph: Graph) -> SolveResult:
    if graph.n == 0:
        raise UndefinedForEmptyGraph(
            "dominant metric dimension is undefined for the empty graph"
        )
    if not graph.is_connected():
        raise Disconnected("dominant metric dimension needs a connected graph")
    if graph.n == 1:
        return SolveResult("ddim", 0, (), 0, 0.0)
    dist = graph.all_pairs_distances()
    return solve_cover(build_cover_instance(dist, "ddim"), "ddim")


def solve_mode(graph: Graph, mode: str) -> SolveResult:
    if mode == "gamma":
        return dominating_number(graph)
    if mode == "dim":
        return metric_dimension(graph)
    if mode == "ddim":
        return dominant_metric_dimension(graph)
    raise ValueError(f"mode must be one of {MODES}")


# -- independent checks and oracle ---------------------------------------------------


def is_dominating(graph: Graph, subset) -> bool:
    sub = list(subset)
    if not sub and graph.n:
        return False
    covered = 0
    for v in sub:
        covered |= graph.adj[v] | (1 << v)
    return covered == (1 << graph.n) - 1


def is_resolving(graph: Graph, subset) -> bool:
    dist = graph.all_pairs_distances()
    sub = list(subset)
    seen = set()
    for v in range(graph.n):
        key = tuple(dist[s][v] for s in sub)
        if key in seen:
            return False
        seen.add(key)
    return True


def brute_force_oracle(graph: Graph, mode: str) -> int:
    """Smallest feasible size by exhaustive subset search (independent of
    the branch-and-bound; shares only the BFS distance matrix)."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    n = graph.n
    if n > _ORACLE_MAX_VERTICES:
        raise TooLarge(f"oracle supports at most {_ORACLE_MAX_VERTICES} vertices")
    if mode == "ddim" and n == 0:
        raise UndefinedForEmptyGraph(
            "dominant metric dimension is undefined for the empty graph"
        )
    if mode in ("dim", "ddim") and not graph.is_connected():
        raise Disconnected(f"{mode} needs a connected graph")
    if mode == "ddim" and n == 1:
        return 0
    dist = graph.all_pairs_distances()

    def feasible(sub) -> bool:
        if mode in ("gamma", "ddim"):
            if not sub:
                return n == 0
            near = np.zeros(n, dtype=bool)
            for s in sub:
                near |= dist[s] <= 1
            if not near.all():
                return False
        if mode in ("dim", "ddim"):
            seen = set()
            for v in range(n):
                key = tuple(dist[s][v] for s in sub)
                if key in seen:
                    return False
                seen.add(key)
        return True

    for k in range(n + 1):
        for combo in combinations(range(n), k):
            if feasible(combo):
                return k
    raise AssertionError("no feasible subset found")
