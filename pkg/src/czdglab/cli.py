"""Command-line surface: ring reports, claim verification, atlas sweeps,
and the exact solver on arbitrary edge-list graphs.

Exit codes: 0 success; 1 usage; 2 parse error; 3 undefined or disconnected
graph; 4 resource cap; 5 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys

from .atlas import (
    ATLAS_FAMILIES,
    RingReport,
    atlas_reports,
    build_report,
    graph_pair,
    reports_to_csv,
    reports_to_json,
)
from .claims import ClaimResult, has_unexpected_failure, run_claims
from .errors import (
    Disconnected,
    EmptyGraphUndefined,
    InconsistentPresentation,
    MalformedGraphFile,
    NonOrientableRelation,
    NonPrimePowerGF,
    NonTerminating,
    NotPrime,
    OrderOutOfRange,
    SpecSyntaxError,
    TooLarge,
    UndefinedForEmptyGraph,
    UnknownVariable,
)
from .graphs import graph_from_edge_list_text
from .solver import MODES, solve_mode

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_UNDEFINED = 3
EXIT_RESOURCE = 4
EXIT_VERIFY = 5

_PARSE_ERRORS = (
    SpecSyntaxError,
    UnknownVariable,
    NonPrimePowerGF,
    NotPrime,
    NonOrientableRelation,
    InconsistentPresentation,
    MalformedGraphFile,
)
_UNDEFINED_ERRORS = (EmptyGraphUndefined, UndefinedForEmptyGraph, Disconnected)
_RESOURCE_ERRORS = (OrderOutOfRange, NonTerminating, TooLarge)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems as exit code 1, not 2."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _json_dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


# -- info ---------------------------------------------------------------------


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


def _stats_lines(title: str, stats) -> list[str]:
    if stats is None:
        return [f"{title}: undefined (the ring is an integral domain)"]

    def witness(values: list[str]) -> str:
        return "{" + ", ".join(values) + "}"

    return [
        f"{title}:",
        f"  vertices: {stats.vertices}",
        f"  edges: {stats.edges}",
        f"  diameter: {stats.diameter}",
        f"  girth: {stats.girth}",
        f"  families: {', '.join(stats.families) if stats.families else '-'}",
        f"  gamma: {stats.gamma}  witness {witness(stats.gamma_witness)}",
        f"  dim: {stats.dim}  witness {witness(stats.dim_witness)}",
        f"  ddim: {stats.ddim}  witness {witness(stats.ddim_witness)}",
    ]


def render_report_text(report: RingReport) -> str:
    lines = [
        f"spec: {report.spec}",
        f"order: {report.order}",
        f"field: {_yes_no(report.is_field)}",
        f"local: {_yes_no(report.is_local)}",
        f"reduced: {_yes_no(report.is_reduced)}",
        f"boolean: {_yes_no(report.is_boolean)}",
        f"von neumann regular: {_yes_no(report.is_vnr)}",
        f"nonzero zero divisors: {report.zd_count}",
    ]
    lines.extend(_stats_lines("zero-divisor graph", report.zdg))
    lines.extend(_stats_lines("compressed zero-divisor graph", report.czdg))
    if report.czdg_classes is not None:
        lines.append("annihilator classes:")
        lines.extend(
            f"  {rep} = {{{', '.join(members)}}}"
            for rep, members in report.czdg_classes
        )
    return "\n".join(lines)


def cmd_info(args) -> int:
    dot_text = None
    if args.dot:
        zdg, czdg = graph_pair(args.spec)  # raises for integral domains
        dot_text = (zdg if args.dot == "zdg" else czdg).to_dot()
    report = build_report(args.spec)
    if args.json:
        print(_json_dump(report.as_dict()))
    else:
        print(render_report_text(report))
    if dot_text is not None:
        print(dot_text)
    return EXIT_OK


# -- verify -------------------------------------------------------------------


def _render_claims_text(results: list[ClaimResult]) -> str:
    width = max(len(r.claim_id) for r in results)
    lines = []
    for r in results:
        lines.append(f"{r.claim_id:<{width}}  {r.status:<12} {r.description}")
        if r.status == "SKIPPED":
            lines.append(f"{'':<{width}}  reason: {r.computed}")
            continue
        lines.append(f"{'':<{width}}  claimed:  {r.claimed}")
        lines.append(f"{'':<{width}}  computed: {r.computed}")
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = ", ".join(f"{n} {status}" for status, n in sorted(counts.items()))
    lines.append(f"claims: {len(results)} total: {summary}")
    return "\n".join(lines)


def cmd_verify(args) -> int:
    only = None
    if args.only:
        only = [token.strip() for token in args.only.split(",") if token.strip()]
        if not only:
            raise _UsageError("--only given without claim ids")
    try:
        results = run_claims(only=only)
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    if args.json:
        print(_json_dump([r.as_dict() for r in results]))
    else:
        print(_render_claims_text(results))
    return EXIT_VERIFY if has_unexpected_failure(results) else EXIT_OK


# -- atlas --------------------------------------------------------------------


def cmd_atlas(args) -> int:
    families = tuple(
        token.strip() for token in args.families.split(",") if token.strip()
    )
    unknown = set(families) - set(ATLAS_FAMILIES)
    if unknown:
        raise _UsageError(
            f"unknown families: {', '.join(sorted(unknown))} "
            f"(choose from {', '.join(ATLAS_FAMILIES)})"
        )
    reports = atlas_reports(max_order=args.max_order, families=families)
    if args.json:
        print(reports_to_json(reports))
    else:
        sys.stdout.write(reports_to_csv(reports))
    return EXIT_OK


# -- solve --------------------------------------------------------------------


def cmd_solve(args) -> int:
    try:
        with open(args.graph_file, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise MalformedGraphFile(f"cannot read {args.graph_file}: {exc}") from exc
    graph = graph_from_edge_list_text(text)
    result = solve_mode(graph, args.mode)
    print(
        _json_dump(
            {
                "mode": result.mode,
                "optimum": result.optimum,
                "witness": [str(v) for v in result.witness],
                "explored_nodes": result.explored_nodes,
                "elapsed_s": result.elapsed_s,
            }
        )
    )
    return EXIT_OK


# -- entry point ----------------------------------------------------------------


def build_parser() -> _Parser:
    parser = _Parser(
        prog="czdg",
        description=(
            "Workbench for zero-divisor graphs of finite commutative rings "
            "and their annihilator-class compressions."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_info = sub.add_parser("info", help="report on a single ring")
    p_info.add_argument("spec", help='ring spec, e.g. "Z16" or "Z2 x GF(4)"')
    p_info.add_argument("--json", action="store_true", help="emit JSON")
    p_info.add_argument(
        "--dot", choices=("zdg", "czdg"), help="also emit DOT for one graph"
    )
    p_info.set_defaults(func=cmd_info)

    p_verify = sub.add_parser("verify", help="run the claims catalogue")
    p_verify.add_argument("--json", action="store_true", help="emit JSON")
    p_verify.add_argument(
        "--only", help="comma-separated claim ids to run", default=None
    )
    p_verify.set_defaults(func=cmd_verify)

    p_atlas = sub.add_parser("atlas", help="sweep ring families")
    p_atlas.add_argument("--max-order", type=int, required=True)
    p_atlas.add_argument(
        "--families",
        default=",".join(ATLAS_FAMILIES),
        help=f"comma-separated subset of: {', '.join(ATLAS_FAMILIES)}",
    )
    fmt = p_atlas.add_mutually_exclusive_group()
    fmt.add_argument("--csv", action="store_true", help="emit CSV (default)")
    fmt.add_argument("--json", action="store_true", help="emit JSON")
    p_atlas.set_defaults(func=cmd_atlas)

    p_solve = sub.add_parser("solve", help="solve one invariant on a graph file")
    p_solve.add_argument("graph_file", help="edge-list file")
    p_solve.add_argument("--mode", choices=MODES, required=True)
    p_solve.set_defaults(func=cmd_solve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except _UNDEFINED_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNDEFINED
    except _RESOURCE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
