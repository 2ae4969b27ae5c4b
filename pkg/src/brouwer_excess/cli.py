"""Command-line front end.

    brouwer-excess report GRAPH [--k 1..3] [--family both] [--format csv --out r.csv]
    brouwer-excess search --mode exhaustive --n 5 [--k 2] [--out rows.csv --format csv]
    brouwer-excess dump GRAPH OBJECT [K]
    brouwer-excess selftest

GRAPH is a file (edge list, or graph6 with one graph per line), ``g6:<string>``,
or a generator such as ``complete:4``, ``star:5``, ``path:4``, ``cycle:5``,
``turan:6,2``, ``matching:2,1`` or ``empty:3``.

Exit status: 0 success (conjecture violations included), 1 a proved bound was
violated, 2 bad input, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

import numpy as np

from . import graphs
from .compound import additive_compound, m_k_direct
from .errors import CapExceededError, GraphFormatError
from .excess import DEFAULT_CLIQUE_ORDERS, ExcessReport, evaluate_bounds, graph_invariants
from .harness import SearchConfig, read_graph_file, rows_to_csv, run_search
from .selftest import run_selftest
from .spectral import laplacian, signless_laplacian
from .token import token_graph, token_laplacian, token_signless_laplacian

EXIT_OK = 0
EXIT_THEOREM = 1
EXIT_INPUT = 2
EXIT_CAP = 3

GENERATORS = {
    "complete": graphs.complete,
    "star": graphs.star,
    "path": graphs.path,
    "cycle": graphs.cycle,
    "turan": graphs.turan,
    "matching": graphs.matching_graph,
    "empty": graphs.empty,
}


def resolve_graphs(source: str) -> list[graphs.Graph]:
    if source.startswith("g6:"):
        return [graphs.decode_graph6(source[3:])]
    if Path(source).exists():
        return read_graph_file(source)
    name, _, args = source.partition(":")
    if name in GENERATORS and args:
        try:
            params = [int(a) for a in args.split(",")]
        except ValueError:
            raise GraphFormatError(f"bad generator arguments in {source!r}") from None
        try:
            return [GENERATORS[name](*params)]
        except (TypeError, ValueError) as exc:
            raise GraphFormatError(f"{source!r}: {exc}") from None
    raise GraphFormatError(f"{source!r} is not a file, a g6: literal or a generator spec")


def parse_int_range(text: str) -> list[int]:
    """'3' -> [3]; '1..4' -> [1, 2, 3, 4]; '1,3,5' -> [1, 3, 5]."""
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def format_matrix(m: np.ndarray) -> str:
    def cell(x):
        x = float(x)
        if x.is_integer():
            return str(int(x))
        return repr(x)

    lines = [str(m.shape[0])]
    lines.extend(" ".join(cell(x) for x in row) for row in m)
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def reports_to_csv(reports: list[ExcessReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ExcessReport.CSV_HEADER)
    for r in reports:
        w.writerows(r.csv_rows())
    return buf.getvalue()


def cmd_report(args) -> int:
    status = EXIT_OK
    reports = []
    for g in resolve_graphs(args.graph):
        ks = parse_int_range(args.k) if args.k else list(range(1, g.n + 1))
        inv = graph_invariants(g, args.clique_orders)
        for k in ks:
            rep = evaluate_bounds(g, k, args.family, args.clique_orders, args.cap, args.tol,
                                  strict=False, invariants=inv)
            if rep.violations("theorem"):
                status = EXIT_THEOREM
            reports.append(rep)
    sys.stdout.write(json.dumps([r.to_dict() for r in reports], indent=2) + "\n")
    if args.out:
        text = reports_to_csv(reports) if args.format == "csv" else \
            json.dumps([r.to_dict() for r in reports], indent=2) + "\n"
        Path(args.out).write_text(text)
    return status


def cmd_search(args) -> int:
    config = SearchConfig(
        mode=args.mode,
        n=parse_int_range(args.n) if args.n else (),
        k=parse_int_range(args.k) if args.k else None,
        count=args.count, p=args.p, seed=args.seed, input_path=args.input,
        cap=args.cap, tol=args.tol, family=args.family,
        clique_orders=args.clique_orders, allow_large=args.allow_large,
    )
    want_rows = bool(args.out) and args.format == "csv"
    summary, rows = run_search(config, want_rows=want_rows, progress_every=args.progress)
    sys.stdout.write(summary.to_json(indent=2) + "\n")
    if args.out:
        _write(rows_to_csv(rows) if want_rows else summary.to_json(indent=2) + "\n", args.out)
    return EXIT_THEOREM if summary.theorem_violations() else EXIT_OK


DUMP_OBJECTS = ("laplacian", "signless", "compound", "m_k", "token", "token-laplacian", "token-signless")


def cmd_dump(args) -> int:
    needs_k = args.object not in ("laplacian", "signless")
    if needs_k and args.order is None:
        raise GraphFormatError(f"dump {args.object} needs an order K")
    chunks = []
    for g in resolve_graphs(args.graph):
        k = args.order
        if args.object == "laplacian":
            chunks.append(format_matrix(laplacian(g)))
        elif args.object == "signless":
            chunks.append(format_matrix(signless_laplacian(g)))
        elif args.object == "compound":
            chunks.append(format_matrix(additive_compound(laplacian(g), k, args.cap).matrix))
        elif args.object == "m_k":
            chunks.append(format_matrix(m_k_direct(g, k, args.family, args.cap).matrix))
        elif args.object == "token":
            chunks.append(graphs.format_edge_list(token_graph(g, k, args.cap).graph))
        elif args.object == "token-laplacian":
            chunks.append(format_matrix(token_laplacian(g, k, args.cap)))
        else:
            chunks.append(format_matrix(token_signless_laplacian(g, k, args.cap)))
    sys.stdout.write("".join(chunks))
    return EXIT_OK


def cmd_selftest(args) -> int:
    return EXIT_OK if run_selftest() else EXIT_THEOREM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brouwer-excess", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, family_choices=("laplacian", "signless", "both")):
        p.add_argument("--cap", type=int, default=None, help="max C(n,k) to enumerate")
        p.add_argument("--tol", type=float, default=None, help="violation tolerance")
        p.add_argument("--family", choices=family_choices, default="laplacian")
        p.add_argument("--clique-orders", type=parse_int_range, default=list(DEFAULT_CLIQUE_ORDERS),
                       help="r values for the K_{r+1}-free bounds, e.g. 2,3")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None, help="also write results to PATH")

    p = sub.add_parser("report", help="evaluate all bounds for one graph")
    p.add_argument("graph")
    p.add_argument("--k", default=None, help="k, k1..k2 or a comma list (default 1..n)")
    common(p)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("search", help="exhaustive, sampled or file-driven search")
    p.add_argument("--mode", choices=("exhaustive", "sample", "file"), default="exhaustive")
    p.add_argument("--n", default=None, help="n, n1..n2 or a comma list")
    p.add_argument("--k", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--input", default=None, help="edge-list or graph6 file for --mode file")
    p.add_argument("--allow-large", action="store_true", help="permit exhaustive n > 7")
    p.add_argument("--progress", type=int, default=0, metavar="EVERY",
                   help="log progress to stderr every EVERY graphs")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("dump", help="print a matrix or a token graph")
    p.add_argument("graph")
    p.add_argument("object", choices=DUMP_OBJECTS)
    p.add_argument("order", type=int, nargs="?", default=None)
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--family", choices=("laplacian", "signless"), default="laplacian")
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("selftest", help="run the bundled property checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, stream=sys.stderr, format="%(message)s", force=True)
    try:
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (GraphFormatError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
