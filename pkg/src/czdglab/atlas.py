"""Ring reports and the ring atlas.

A report bundles everything the workbench can say about one ring: axiom-level
predicates, the zero-divisor graph and its compression, and the three exact
invariants (dominating number, metric dimension, dominant metric dimension)
of both graphs.  The atlas enumerates a deterministic catalogue of rings and
serialises their reports as CSV or JSON, with every value integer or string
(infinite diameters and girths are spelled "inf", never a float).
"""
from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass

from .errors import OrderOutOfRange
from .graphs import Graph
from .rings import FiniteRing, prime_power, ring_order_cap
from .ringspec import build_ring
from .solver import SolveResult, solve_mode
from .zdg import CompressedGraph, ZeroDivisorGraph, build_czdg, build_zdg

ATLAS_FAMILIES = ("zn", "products", "presentations")

#: Quotient presentations shipped with the atlas, ordered by ring order.
BUILTIN_PRESENTATIONS = (
    # order 4
    "Z2[x]/(x^2)",
    # order 8
    "Z2[x]/(x^3)",
    "Z2[x,y]/((x,y)^2)",
    "Z4[x]/(2x,x^2)",
    "Z4[x]/(2x,x^2-2)",
    "Z8[x]/(2x,x^2-2)",
    # order 9
    "Z3[x]/(x^2)",
    # order 16
    "GF(4)[x]/(x^2)",
    "Z2[x,y,z]/((x,y,z)^2)",
    "Z4[x]/(x^2+x+1)",
    "Z2[x]/(x^4)",
    "Z2[x,y]/(x^3,xy,y^2)",
    "Z4[x]/(2x,x^3-2)",
    "Z4[x]/(x^2-2)",
    "Z8[x]/(2x,x^2)",
    "Z4[x]/(x^2-2x-2)",
    "Z4[x]/(x^2-2x)",
    "Z4[x]/(x^2)",
    "Z2[x,y]/(x^2,y^2)",
    "Z2[x,y]/(x^2-y^2,xy)",
    "Z4[x]/(x^3,2x^2,2x)",
    # order 25
    "Z5[x]/(x^2)",
    # order 27
    "Z3[x]/(x^3)",
    "Z3[x,y]/((x,y)^2)",
    "Z9[x]/(3x,x^2)",
    "Z9[x]/(3x,x^2-3)",
    "Z9[x]/(3x,x^2-6)",
    # order 81
    "Z9[x]/(x^2)",
    "Z3[x,y]/(xy,x^3,y^3,x^2-y^2)",
    # order 256
    "Z8[x,y]/(x^2,y^2,4x,4y,2xy)",
)


def _extent(value) -> str | int:
    """Diameter/girth as a JSON- and CSV-safe value: int or the string "inf"."""
    if value == math.inf:
        return "inf"
    return int(value)


@dataclass
class GraphStats:
    """Invariants of one graph, witnesses as printable vertex labels."""

    vertices: int
    edges: int
    diameter: str | int
    girth: str | int
    families: list[str]
    gamma: int
    dim: int
    ddim: int
    gamma_witness: list[str]
    dim_witness: list[str]
    ddim_witness: list[str]

    def as_dict(self) -> dict:
        return {
            "vertices": self.vertices,
            "edges": self.edges,
            "diameter": self.diameter,
            "girth": self.girth,
            "families": self.families,
            "gamma": self.gamma,
            "dim": self.dim,
            "ddim": self.ddim,
            "gamma_witness": self.gamma_witness,
            "dim_witness": self.dim_witness,
            "ddim_witness": self.ddim_witness,
        }


def graph_stats(graph: Graph, labels: list[str]) -> GraphStats:
    """Solve all three invariants of a connected graph and collect its shape."""
    results: dict[str, SolveResult] = {
        mode: solve_mode(graph, mode) for mode in ("gamma", "dim", "ddim")
    }

    def witness(mode: str) -> list[str]:
        return [labels[v] for v in results[mode].witness]

    return GraphStats(
        vertices=graph.n,
        edges=graph.edge_count(),
        diameter=_extent(graph.diameter()),
        girth=_extent(graph.girth()),
        families=sorted(graph.classify_family()),
        gamma=results["gamma"].optimum,
        dim=results["dim"].optimum,
        ddim=results["ddim"].optimum,
        gamma_witness=witness("gamma"),
        dim_witness=witness("dim"),
        ddim_witness=witness("ddim"),
    )


@dataclass
class RingReport:
    """Everything the workbench reports about one ring."""

    spec: str
    order: int
    is_field: bool
    is_local: bool
    is_reduced: bool
    is_boolean: bool
    is_vnr: bool
    zd_count: int
    zdg: GraphStats | None
    czdg: GraphStats | None
    czdg_classes: list[tuple[str, list[str]]] | None

    @property
    def has_zero_divisors(self) -> bool:
        return self.zd_count > 0

    def as_dict(self) -> dict:
        return {
            "spec": self.spec,
            "order": self.order,
            "is_field": self.is_field,
            "is_local": self.is_local,
            "is_reduced": self.is_reduced,
            "is_boolean": self.is_boolean,
            "is_vnr": self.is_vnr,
            "zd_count": self.zd_count,
            "zdg": self.zdg.as_dict() if self.zdg else None,
            "czdg": self.czdg.as_dict() if self.czdg else None,
            "czdg_classes": (
                None
                if self.czdg_classes is None
                else [
                    {"rep": rep, "members": members}
                    for rep, members in self.czdg_classes
                ]
            ),
        }


def report_from_ring(ring: FiniteRing) -> RingReport:
    preds = ring.predicates()
    zd_count = len(ring.zero_divisors())
    zdg_stats = czdg_stats = classes = None
    if zd_count:
        zdg = build_zdg(ring)
        czdg = build_czdg(ring)
        zdg_stats = graph_stats(zdg.graph, zdg.labels())
        czdg_stats = graph_stats(czdg.graph, czdg.labels())
        classes = [
            (label, [ring.labels[e] for e in cls.members])
            for label, cls in zip(czdg.labels(), czdg.partition.classes)
        ]
    return RingReport(
        spec=ring.source_spec,
        order=ring.order,
        is_field=preds["is_field"],
        is_local=preds["is_local"],
        is_reduced=preds["is_reduced"],
        is_boolean=preds["is_boolean"],
        is_vnr=preds["is_vnr"],
        zd_count=zd_count,
        zdg=zdg_stats,
        czdg=czdg_stats,
        czdg_classes=classes,
    )


def build_report(spec_text: str, cap: int | None = None) -> RingReport:
    return report_from_ring(build_ring(spec_text, cap))


def graph_pair(
    spec_text: str, cap: int | None = None
) -> tuple[ZeroDivisorGraph, CompressedGraph]:
    ring = build_ring(spec_text, cap)
    return build_zdg(ring), build_czdg(ring)


# -- atlas enumeration -------------------------------------------------------


def _field_orders(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if prime_power(q)]


def _field_products(max_order: int) -> list[tuple[int, ...]]:
    """Nondecreasing tuples of >= 2 prime-power orders with product <= cap."""
    out: list[tuple[int, ...]] = []
    orders = _field_orders(max_order // 2)

    def extend(prefix: tuple[int, ...], product: int, minimum: int):
        for q in orders:
            if q < minimum or product * q > max_order:
                continue
            chosen = prefix + (q,)
            if len(chosen) >= 2:
                out.append(chosen)
            extend(chosen, product * q, q)

    extend((), 1, 2)
    out.sort(key=lambda t: (math.prod(t), t))
    return out


def atlas_specs(
    max_order: int = 64, families=ATLAS_FAMILIES
) -> list[str]:
    """Deterministic list of ring specs making up the atlas."""
    unknown = set(families) - set(ATLAS_FAMILIES)
    if unknown:
        raise ValueError(f"unknown atlas families: {sorted(unknown)}")
    specs: list[str] = []
    if "zn" in families:
        specs.extend(f"Z{n}" for n in range(2, max_order + 1))
    if "products" in families:
        specs.extend(
            " x ".join(f"GF({q})" for q in factors)
            for factors in _field_products(max_order)
        )
    if "presentations" in families:
        specs.extend(BUILTIN_PRESENTATIONS)
    return specs


def atlas_reports(
    max_order: int = 64,
    families=ATLAS_FAMILIES,
    cap: int | None = None,
) -> list[RingReport]:
    if cap is None:
        cap = ring_order_cap()
    if max_order > cap:
        raise OrderOutOfRange(
            f"atlas max order {max_order} exceeds the ring order cap {cap}"
        )
    return [build_report(spec, cap) for spec in atlas_specs(max_order, families)]


# -- serialisation -----------------------------------------------------------

CSV_COLUMNS = (
    "spec",
    "order",
    "is_field",
    "is_local",
    "is_reduced",
    "is_boolean",
    "is_vnr",
    "zd_count",
    "zdg_vertices",
    "zdg_edges",
    "zdg_diameter",
    "zdg_girth",
    "zdg_families",
    "zdg_gamma",
    "zdg_dim",
    "zdg_ddim",
    "czdg_vertices",
    "czdg_edges",
    "czdg_diameter",
    "czdg_girth",
    "czdg_families",
    "czdg_gamma",
    "czdg_dim",
    "czdg_ddim",
    "czdg_classes",
)

_UNDEFINED = "undefined"


def _csv_bool(flag: bool) -> str:
    return "true" if flag else "false"


def _stats_cells(stats: GraphStats | None) -> list[str]:
    if stats is None:
        return [_UNDEFINED] * 8
    return [
        str(stats.vertices),
        str(stats.edges),
        str(stats.diameter),
        str(stats.girth),
        ";".join(stats.families),
        str(stats.gamma),
        str(stats.dim),
        str(stats.ddim),
    ]


def report_csv_row(report: RingReport) -> list[str]:
    if report.czdg_classes is None:
        classes_cell = _UNDEFINED
    else:
        classes_cell = ";".join(
            f"{rep}={'|'.join(members)}"
            for rep, members in report.czdg_classes
        )
    return [
        report.spec,
        str(report.order),
        _csv_bool(report.is_field),
        _csv_bool(report.is_local),
        _csv_bool(report.is_reduced),
        _csv_bool(report.is_boolean),
        _csv_bool(report.is_vnr),
        str(report.zd_count),
        *_stats_cells(report.zdg),
        *_stats_cells(report.czdg),
        classes_cell,
    ]


def reports_to_csv(reports: list[RingReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        writer.writerow(report_csv_row(report))
    return buffer.getvalue()


def reports_to_json(reports: list[RingReport]) -> str:
    return json.dumps(
        [report.as_dict() for report in reports], indent=2, sort_keys=True
    )
