"""Command-line workbench. Subcommands: construct, route, check, stats, bench, fixtures.

Exit codes: 0 success, 1 property or fixture failure (including a stuck
route), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bench import run_benchmark, specs_from_json
from .categories import membership_dimension, parse_categories, serialize_categories
from .checks import (
    ALL_PAIRS_ROUTING,
    INTERNALLY_CONNECTED,
    SHATTERED,
    is_internally_connected,
    is_shattered,
    verify_all_pairs_routing,
)
from .construct import (
    binary_tree_categories,
    graph_categories,
    path_categories,
    tree_categories,
)
from .errors import GenerationError, ParseError, ValidationError
from .fixtures import run_fixtures
from .graph import (
    as_binary,
    bfs_spanning_tree,
    choose_root,
    diameter,
    is_path,
    is_tree,
    parse_edge_list,
)
from .routing import format_trace, greedy_route

_PROP_KEYS = {
    "internal": INTERNALLY_CONNECTED,
    "shattered": SHATTERED,
    "all-pairs": ALL_PAIRS_ROUTING,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="catroute",
        description=(
            "Construct category systems over connected graphs, route greedily "
            "with them, and verify the structural properties that make routing work."
        ),
    )
    parser.add_argument("--version", action="version", version=f"catroute {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a category system for a graph")
    p.add_argument("--graph", required=True, help="edge-list file")
    p.add_argument(
        "--method",
        default="auto",
        choices=("auto", "path", "binary-tree", "tree", "graph"),
        help="construction to use; auto picks the most specific applicable",
    )
    p.add_argument("--out", help="write the category JSON here (default: stdout)")

    p = sub.add_parser("route", help="greedily route one message")
    p.add_argument("--graph", required=True)
    p.add_argument("--cats", required=True, help="category JSON file")
    p.add_argument("--from", dest="source", required=True, type=int)
    p.add_argument("--to", dest="target", required=True, type=int)
    p.add_argument("--trace", action="store_true", help="print every hop")

    p = sub.add_parser("check", help="verify structural properties")
    p.add_argument("--graph", required=True)
    p.add_argument("--cats", required=True)
    p.add_argument(
        "--props",
        default="internal,shattered,all-pairs",
        help="comma list from: internal, shattered, all-pairs",
    )

    p = sub.add_parser("stats", help="print n, m, diam and (with --cats) memdim")
    p.add_argument("--graph", required=True)
    p.add_argument("--cats")

    p = sub.add_parser("bench", help="run generator specs and emit CSV statistics")
    p.add_argument("--spec", required=True, help="JSON list of generator specs")
    p.add_argument("--out", help="CSV output path (default: stdout)")

    sub.add_parser("fixtures", help="re-check the pinned reference instances")
    return parser


def _load_graph(path):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_edge_list(handle)


def _load_categories(path, n):
    with open(path, "r", encoding="utf-8") as handle:
        return parse_categories(handle, n)


def _construct(args):
    g = _load_graph(args.graph)
    method = args.method
    if method == "auto":
        method = "path" if is_path(g) else "tree" if is_tree(g) else "graph"
    if method == "path":
        system = path_categories(g)
    elif method == "binary-tree":
        if not is_tree(g):
            raise ValidationError("binary-tree construction needs a tree")
        tree = bfs_spanning_tree(g, choose_root(g, max_degree=2))
        system = binary_tree_categories(as_binary(tree))
    elif method == "tree":
        if not is_tree(g):
            raise ValidationError("tree construction needs a tree")
        system = tree_categories(bfs_spanning_tree(g, choose_root(g)))
    else:
        system = graph_categories(g)
    text = serialize_categories(system)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _route(args):
    g = _load_graph(args.graph)
    system = _load_categories(args.cats, g.n)
    trace = greedy_route(g, system, args.source, args.target)
    if args.trace:
        print(format_trace(trace, g))
    elif trace.delivered:
        print(f"DELIVERED in {trace.hops} hops")
    else:
        print(f"STUCK at {g.label(trace.stuck_at)} (d={trace.hop_distances[-1]})")
    return 0 if trace.delivered else 1


def _render_witness(report):
    if report.property_name == INTERNALLY_CONNECTED:
        return f"category {report.witness}"
    if report.property_name == SHATTERED:
        return f"{report.witness}"
    s, t, stuck = report.witness
    return f"({s},{t}) stuck at {stuck}"


def _check(args):
    g = _load_graph(args.graph)
    system = _load_categories(args.cats, g.n)
    requested = [key.strip() for key in args.props.split(",") if key.strip()]
    unknown = [key for key in requested if key not in _PROP_KEYS]
    if unknown:
        raise ValidationError(f"unknown properties: {', '.join(unknown)}")
    checkers = {
        "internal": is_internally_connected,
        "shattered": is_shattered,
        "all-pairs": verify_all_pairs_routing,
    }
    failed = False
    for key in requested:
        report = checkers[key](g, system)
        if report.holds:
            print(f"{report.property_name}: OK")
        else:
            failed = True
            print(f"{report.property_name}: FAIL witness={_render_witness(report)}")
    return 1 if failed else 0


def _stats(args):
    g = _load_graph(args.graph)
    print(f"n={g.n}")
    print(f"m={g.num_edges}")
    print(f"diam={diameter(g)}")
    if args.cats:
        system = _load_categories(args.cats, g.n)
        print(f"memdim={membership_dimension(system)}")
    return 0


def _bench(args):
    with open(args.spec, "r", encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid bench spec JSON: {exc}") from None
    specs = specs_from_json(payload)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            run_benchmark(specs, sink=handle)
    else:
        run_benchmark(specs, sink=sys.stdout)
    return 0


def _fixtures(args):
    outcomes = run_fixtures()
    failed = False
    for outcome in outcomes:
        status = "PASS" if outcome.passed else "FAIL"
        print(f"{status} {outcome.name} ({outcome.detail})")
        failed = failed or not outcome.passed
    return 1 if failed else 0


_HANDLERS = {
    "construct": _construct,
    "route": _route,
    "check": _check,
    "stats": _stats,
    "bench": _bench,
    "fixtures": _fixtures,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, ValidationError, GenerationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
