"""Command-line entry point ``bchrom``.

Exit codes: 0 success, 1 a check failed (or the coloring is not a
b-coloring), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys

from . import generators
from .coloring import Coloring, ColoringError, is_b_coloring, is_proper
from .graph import Graph, GraphError, girth, is_connected, iter_bits
from .graphio import ParseError, parse_text, guess_format, write_graph6
from .harness import CHECKS, CSV_COLUMNS, DEFAULT_CAP, check_bounds, csv_rows, sweep
from .recolor import BoundViolation, recolor_general, recolor_quasi_line
from .recognizers import classify, clique_number, is_chordal, is_claw_free, is_quasi_line
from .solver import b_chromatic, m_degree

log = logging.getLogger("bchromatic")


class InputError(Exception):
    pass


def _read_graph(path: str, fmt: str | None) -> Graph:
    try:
        if path == "-":
            text = sys.stdin.read()
            fmt = fmt or "graph6"
        else:
            with open(path, encoding="ascii") as fh:
                text = fh.read()
            fmt = fmt or guess_format(path)
        return parse_text(text, fmt)
    except (OSError, UnicodeDecodeError, ParseError, GraphError) as err:
        raise InputError(f"{path}: {err}") from None


def _read_coloring(path: str, g: Graph) -> Coloring:
    try:
        with open(path) as fh:
            data = json.load(fh)
        if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
            raise InputError(f"{path}: expected a JSON array of integer colors")
        c = Coloring(tuple(data))
    except (OSError, json.JSONDecodeError, ColoringError) as err:
        raise InputError(f"{path}: {err}") from None
    if len(c) != g.n:
        raise InputError(f"{path}: {len(c)} colors for {g.n} vertices")
    return c


def _dump(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def cmd_compute(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    if g.n == 0:
        raise InputError("graph has no vertices")
    result = b_chromatic(g)
    _dump({
        "n": g.n,
        "edges": g.num_edges,
        "chi": result.bounds_used[0],
        "b": result.b,
        "m": m_degree(g),
        "omega": clique_number(g),
        "girth": girth(g),
        "connected": is_connected(g),
        "chordal": is_chordal(g),
        "quasi_line": is_quasi_line(g),
        "claw_free": is_claw_free(g),
        "witness": result.witness.to_json(),
    })
    return 0


def cmd_verify(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    c = _read_coloring(args.coloring, g)
    proper = is_proper(g, c)
    classes = []
    for col in range(c.k):
        members = [v for v in range(g.n) if c[v] == col]
        dominating = []
        if proper:
            for v in members:
                seen = {c[u] for u in iter_bits(g.adjacency[v])}
                if len(seen | {col}) == c.k:
                    dominating.append(v)
        classes.append({"color": col, "vertices": members, "dominating": dominating})
    ok = is_b_coloring(g, c)
    _dump({"proper": proper, "b_coloring": ok, "k": c.k, "classes": classes})
    return 0 if ok else 1


def cmd_classify(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    _dump(classify(g).to_dict())
    return 0


def cmd_bounds(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    report = check_bounds(g, cap=args.cap)
    if args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=CSV_COLUMNS, restval="")
        writer.writeheader()
        writer.writerows(csv_rows({"record": 0, "bounds": report.to_dict()}))
    else:
        _dump(report.to_dict())
    return 0 if report.passed else 1


def cmd_recolor(args) -> int:
    g = _read_graph(args.graph, args.input_format)
    c = _read_coloring(args.coloring, g)
    proc = recolor_quasi_line if args.quasi_line else recolor_general
    try:
        cert = proc(g, c, args.vertex)
    except BoundViolation as err:
        _dump({"violation": str(err), "artifact": err.artifact})
        return 1
    except (ColoringError, GraphError) as err:
        raise InputError(str(err)) from None
    _dump(cert.to_dict())
    return 0


def cmd_gen(args) -> int:
    for i in range(args.count):
        try:
            g = generators.generate(args.family, args.params, args.seed + i)
        except (ValueError, IndexError) as err:
            raise InputError(f"gen {args.family}: {err or 'missing parameters'}") from None
        sys.stdout.write(write_graph6(g).decode("ascii") + "\n")
    return 0


def cmd_sweep(args) -> int:
    checks = CHECKS if args.checks == "all" else tuple(s.strip() for s in args.checks.split(","))
    for name in checks:
        if name not in CHECKS:
            raise InputError(f"unknown check {name!r}; choose from {', '.join(CHECKS)} or 'all'")
    return sweep(
        sys.stdin, sys.stdout, checks=checks, fmt=args.format,
        strict=args.strict, jobs=args.jobs, cap=args.cap,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bchrom", description="b-chromatic numbers and vertex-deletion bounds")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_arg(p):
        p.add_argument("graph", help="graph file (.g6 graph6, .col DIMACS, otherwise edge list; '-' reads graph6 from stdin)")
        p.add_argument("--input-format", choices=("graph6", "dimacs", "edgelist"))

    p = sub.add_parser("compute", help="chi, b, m, omega, girth and class flags as JSON")
    graph_arg(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a coloring (JSON array) is a b-coloring")
    graph_arg(p)
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classify", help="class recognition report as JSON")
    graph_arg(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bounds", help="per-vertex deletion bounds report")
    graph_arg(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("recolor", help="b-coloring of G - x with a certificate")
    graph_arg(p)
    p.add_argument("coloring")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--quasi-line", action="store_true")
    p.set_defaults(func=cmd_recolor)

    p = sub.add_parser("gen", help="emit graph6 lines for a generator family")
    p.add_argument("family", choices=generators.FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1, help="graphs to emit; seeds seed, seed+1, ...")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sweep", help="check graph6 lines from stdin")
    p.add_argument("--checks", default="bounds", help="comma list of bounds,constructive or 'all'")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--strict", action="store_true", help="stop with status 2 at the first malformed line")
    p.add_argument("--jobs", type=int, default=int(os.environ.get("BCHROM_JOBS", "1")))
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except InputError as err:
        print(f"bchrom: error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
