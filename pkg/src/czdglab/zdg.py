"""Zero-divisor graphs and their annihilator-class compressions.

For a finite commutative ring R, the zero-divisor graph has the nonzero
zero divisors as vertices with an edge where the product is zero.  The
compressed variant merges elements with identical annihilators and keeps
an edge between distinct classes whose representatives multiply to zero.
Both are undefined when R has no nonzero zero divisors.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyGraphUndefined
from .graphs import Graph
from .rings import FiniteRing, bitset_from_mask

__all__ = [
    "AnnClass",
    "AnnClassPartition",
    "ZeroDivisorGraph",
    "CompressedGraph",
    "ann_classes",
    "build_zdg",
    "build_czdg",
]


@dataclass(frozen=True)
class AnnClass:
    """Elements sharing one annihilator; rep is the smallest member index."""

    rep: int
    members: tuple[int, ...]
    ann_bits: int


class AnnClassPartition:
    """Annihilator-equivalence classes of the nonzero zero divisors."""

    def __init__(self, ring: FiniteRing, classes: list[AnnClass]):
        self.ring = ring
        self.classes = classes
        self.class_of = {}
        for k, cls in enumerate(classes):
            for e in cls.members:
                self.class_of[e] = k

    def __len__(self):
        return len(self.classes)


def _zero_divisor_indices(ring: FiniteRing) -> np.ndarray:
    idx = np.flatnonzero(ring._zero_divisor_mask)
    if idx.size == 0:
        raise EmptyGraphUndefined(
            f"{ring.source_spec or 'ring'} has no nonzero zero divisors"
        )
    return idx


def ann_classes(ring: FiniteRing) -> AnnClassPartition:
    zds = _zero_divisor_indices(ring)
    ann_rows = ring.mul_table[zds] == ring.zero
    keys = np.packbits(ann_rows, axis=1).tobytes()
    row_bytes = (ann_rows.shape[1] + 7) // 8
    groups: dict[bytes, list[int]] = {}
    for pos in range(len(zds)):
        key = keys[pos * row_bytes : (pos + 1) * row_bytes]
        groups.setdefault(key, []).append(pos)
    classes = []
    for positions in groups.values():
        members = tuple(int(zds[p]) for p in positions)
        classes.append(
            AnnClass(members[0], members, bitset_from_mask(ann_rows[positions[0]]))
        )
    classes.sort(key=lambda c: c.rep)
    return AnnClassPartition(ring, classes)


class ZeroDivisorGraph:
    """The zero-divisor graph; vertices map to ring element indices."""

    def __init__(self, ring: FiniteRing, vertices: tuple[int, ...], graph: Graph):
        self.ring = ring
        self.vertices = vertices
        self.graph = graph

    def labels(self) -> list[str]:
        return [self.ring.labels[e] for e in self.vertices]

    def to_dot(self) -> str:
        return self.graph.to_dot(labels=self.labels(), name="zdg")


class CompressedGraph:
    """The compressed zero-divisor graph over annihilator classes."""

    def __init__(self, partition: AnnClassPartition, graph: Graph):
        self.ring = partition.ring
        self.partition = partition
        self.graph = graph

    def labels(self) -> list[str]:
        return [f"[{self.ring.labels[c.rep]}]" for c in self.partition.classes]

    def member_labels(self) -> list[str]:
        return [
            ", ".join(self.ring.labels[e] for e in c.members)
            for c in self.partition.classes
        ]

    def to_dot(self) -> str:
        return self.graph.to_dot(
            labels=self.labels(), tooltips=self.member_labels(), name="czdg"
        )


def build_zdg(ring: FiniteRing) -> ZeroDivisorGraph:
    zds = _zero_divisor_indices(ring)
    block = ring.mul_table[np.ix_(zds, zds)] == ring.zero
    np.fill_diagonal(block, False)
    graph = Graph(len(zds))
    for i in range(len(zds)):
        graph.adj[i] = bitset_from_mask(block[i])
    assert all(not (graph.adj[i] >> i) & 1 for i in range(graph.n))
    return ZeroDivisorGraph(ring, tuple(int(e) for e in zds), graph)


def build_czdg(ring: FiniteRing) -> CompressedGraph:
    part = ann_classes(ring)
    k = len(part.classes)
    graph = Graph(k)
    mul = ring.mul_table
    zero = ring.zero
    for i in range(k):
        ci = part.classes[i]
        for j in range(i + 1, k):
            cj = part.classes[j]
            rep_zero = mul[ci.rep, cj.rep] == zero
            # products between two fixed classes are uniformly zero or not
            blk = mul[np.ix_(ci.members, cj.members)] == zero
            assert bool(blk.all()) == bool(rep_zero) and bool(blk.any()) == bool(
                rep_zero
            ), "annihilator classes gave an ill-defined edge"
            if rep_zero:
                graph.add_edge(i, j)
    return CompressedGraph(part, graph)
