"""Command line surface.

Every run prints one machine-parsable verdict line first,
`STATUS=<ok|negative|error|exhausted> VALUE=<nat or empty>`, followed by
human-readable detail.  Exit codes: 0 success, 1 certified negative,
2 input error, 3 budget exhausted.  Positive results are re-verified before
anything is written; certificates are written even for negative results so
failures reproduce from artifacts alone.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .coloring import ListAssignment, is_proper_packing
from .formats import (
    FormatError,
    format_edge_coloring,
    format_packing,
    parse_edge_lists,
    parse_graph,
    parse_inputs,
    parse_packing,
    parse_vertex_lists,
)
from .galvin import list_edge_color
from .graphs import Graph, bipartition, complete_graph
from .packing import PackRequest, pack_complete
from .search import (
    ABSENT,
    FOUND,
    BoundExceededError,
    SearchBudget,
    SearchExhaustedError,
    chromatic_number,
    list_chromatic_number,
    list_packing_number,
    solve_packing,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_EXHAUSTED = 3


def _verdict(status: str, value: int | None = None) -> None:
    print(f"STATUS={status} VALUE={'' if value is None else value}")


def _read(path: str) -> str:
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is not None:
        Path(path).write_text(text)


def _budget(args) -> SearchBudget:
    return SearchBudget(node_limit=args.budget_nodes, time_limit=args.budget_seconds)


def _load_graph(args) -> Graph:
    return parse_graph(_read(args.graph))


def cmd_pack_complete(args) -> int:
    g = complete_graph(args.n)
    lists = parse_vertex_lists(_read(args.lists), g)
    m = lists.uniform_size()
    if m is None:
        raise FormatError("lists must all have the same size m")
    packing = pack_complete(PackRequest(args.n, lists, m))
    _write(args.output, format_packing(packing))
    _verdict("ok", m)
    print(f"proper packing of size {m} for K_{args.n}, verified")
    return EXIT_OK


def cmd_solve(args) -> int:
    g, lists = parse_inputs(args.graph, args.lists)
    result = solve_packing(g, lists, args.size, _budget(args))
    if result.status == FOUND:
        _write(args.output, format_packing(result.witness))
        _verdict("ok", args.size)
        print(f"proper packing of size {args.size} found ({result.nodes} nodes)")
        return EXIT_OK
    if result.status == ABSENT:
        _verdict("negative")
        print(f"no proper packing of size {args.size} exists ({result.nodes} nodes)")
        return EXIT_NEGATIVE
    _verdict("exhausted")
    print(f"budget exhausted after {result.nodes} nodes", file=sys.stderr)
    return EXIT_EXHAUSTED


def cmd_verify(args) -> int:
    g, lists = parse_inputs(args.graph, args.lists)
    packing = parse_packing(_read(args.packing), g.n)
    report = is_proper_packing(g, lists, packing)
    if report.ok:
        _verdict("ok", packing.size)
        print(f"packing of size {packing.size} is proper")
        return EXIT_OK
    _verdict("negative")
    for violation in report.violations:
        where = ",".join(map(str, violation.where))
        idx = ",".join(map(str, violation.indices))
        print(f"{violation.kind} at ({where}) colorings ({idx})")
    return EXIT_NEGATIVE


def cmd_edge_color(args) -> int:
    g = _load_graph(args)
    bip = bipartition(g)
    edge_lists = parse_edge_lists(_read(args.edge_lists), g)
    ec = list_edge_color(g, bip, edge_lists)
    _write(args.output, format_edge_coloring(ec))
    _verdict("ok", ec.palette_size)
    print(f"proper list edge coloring of {len(ec.colors)} edges, verified")
    return EXIT_OK


def cmd_chi(args) -> int:
    g = _load_graph(args)
    value = chromatic_number(g, _budget(args))
    _verdict("ok", value)
    print(f"chromatic number {value}")
    return EXIT_OK


def _witness_json(ell: ListAssignment | None) -> dict | None:
    if ell is None:
        return None
    return {str(v): sorted(ell[v]) for v in sorted(ell.domain())}


def cmd_chi_list(args) -> int:
    g = _load_graph(args)
    try:
        result = list_chromatic_number(g, args.max_k, _budget(args))
    except BoundExceededError as exc:
        cert = {"bound": exc.bound, "bad_assignment": _witness_json(exc.witness)}
        _write(args.output, json.dumps(cert, indent=2) + "\n")
        _verdict("negative")
        print(f"list chromatic number exceeds {exc.bound}")
        return EXIT_NEGATIVE
    cert = {"value": result.value, "lower_witness": _witness_json(result.lower_witness)}
    _write(args.output, json.dumps(cert, indent=2) + "\n")
    _verdict("ok", result.value)
    print(f"list chromatic number {result.value}")
    return EXIT_OK


def cmd_chi_star(args) -> int:
    g = _load_graph(args)
    try:
        result = list_packing_number(g, args.max_k, _budget(args))
    except BoundExceededError as exc:
        cert = {"bound": exc.bound, "bad_assignment": _witness_json(exc.witness)}
        _write(args.output, json.dumps(cert, indent=2) + "\n")
        _verdict("negative")
        print(f"list packing number exceeds {exc.bound}")
        return EXIT_NEGATIVE
    cert = {
        "value": result.value,
        "lower_witness": _witness_json(result.lower_witness),
        "upper_evidence": result.upper_evidence,
        "color_cap": g.n * result.value,
    }
    _write(args.output, json.dumps(cert, indent=2) + "\n")
    _verdict("ok", result.value)
    print(f"list packing number {result.value}")
    print(
        f"scan summary: all {result.upper_evidence} canonical "
        f"{result.value}-assignments admit packings"
    )
    return EXIT_OK


def cmd_scan(args) -> int:
    budget = _budget(args)
    rows = []
    for n in range(1, args.size + 1):
        g = complete_graph(n)
        chi = chromatic_number(g, budget)
        chi_list = list_chromatic_number(g, args.max_k or n, budget).value
        chi_star = list_packing_number(g, args.max_k or n, budget).value
        rows.append((n, chi, chi_list, chi_star))
    _verdict("ok", args.size)
    print("n,chi,chi_list,chi_star,ratio")
    for n, chi, chi_list, chi_star in rows:
        print(f"{n},{chi},{chi_list},{chi_star},{chi_star / chi_list:.3f}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="listpacking",
        description="Construct and certify proper list packings of complete graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--seed", type=int, default=0, help="seed for randomized runs")
        p.add_argument("--budget-nodes", type=int, default=2_000_000)
        p.add_argument("--budget-seconds", type=float, default=60.0)
        p.add_argument("-o", "--output", default=None, help="output file path")

    p = sub.add_parser("pack-complete", help="pack an m-assignment of K_n")
    p.add_argument("-n", type=int, required=True, help="number of vertices of K_n")
    p.add_argument("--lists", required=True)
    common(p)
    p.set_defaults(func=cmd_pack_complete)

    p = sub.add_parser("solve", help="exact packing search on any graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--lists", required=True)
    p.add_argument("--size", type=int, required=True, help="packing size k")
    common(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="re-check a packing file")
    p.add_argument("--graph", required=True)
    p.add_argument("--lists", required=True)
    p.add_argument("--packing", required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("edge-color", help="list edge coloring of a bipartite graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--edge-lists", required=True)
    common(p)
    p.set_defaults(func=cmd_edge_color)

    p = sub.add_parser("chi", help="exact chromatic number")
    p.add_argument("--graph", required=True)
    common(p)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("chi-list", help="exact list chromatic number")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-k", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_chi_list)

    p = sub.add_parser("chi-star", help="exact list packing number")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-k", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_chi_star)

    p = sub.add_parser("scan", help="table of n, chi, chi_list, chi_star, ratio for K_n")
    p.add_argument("--size", type=int, default=3, help="largest complete graph")
    p.add_argument("--max-k", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_scan)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    random.seed(args.seed)
    try:
        return args.func(args)
    except SearchExhaustedError as exc:
        _verdict("exhausted")
        print(str(exc), file=sys.stderr)
        return EXIT_EXHAUSTED
    except (ValueError, OSError) as exc:
        _verdict("error")
        print(str(exc), file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
