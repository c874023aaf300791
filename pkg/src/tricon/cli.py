"""Command-line front end.

Exit codes: 0 success or consistent audit, 1 usage or input error,
2 verification violations outside the shipped allowlist.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations
from typing import Any

from .audit import DEFAULT_N, MAX_N, SUITES, run_suite
from .bg_ops import ENUM_BOUND, BgOpError, enumerate_3connected, find_trace, replay_trace
from .canon import MAX_CANON_ORDER, are_isomorphic
from .connectivity import find_small_cut, is_3_connected, max_disjoint_paths, vertex_connectivity
from .degree_sequences import ORACLE_BOUND, classify, realize_3connected
from .graph import DegreeSequence, Graph
from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .partition_matrix import MatrixIndex, cell_parameters, column_nonempty_count, enumerate_cell, nonempty_row_range

EXIT_OK, EXIT_USAGE, EXIT_VIOLATIONS = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _sequence(text: str) -> DegreeSequence:
    try:
        s = DegreeSequence.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad sequence {text!r}: {exc}") from exc
    if not s.is_valid:
        raise UsageError(f"sequence terms must be positive integers: {text!r}")
    return s


def _graphs(args: argparse.Namespace) -> list[Graph]:
    texts = args.graph6 or [line for line in sys.stdin.read().splitlines() if line.strip()]
    if not texts:
        raise UsageError("no graph6 input given")
    out = []
    for t in texts:
        try:
            g = graph6_decode(t)
        except Graph6Error as exc:
            raise UsageError(f"malformed graph6 {t!r}: {exc}") from exc
        if g.order > MAX_CANON_ORDER:
            raise UsageError(f"order {g.order} exceeds supported bound {MAX_CANON_ORDER}")
        out.append(g)
    return out


def cmd_classify(args: argparse.Namespace) -> tuple[Any, int]:
    s = _sequence(args.sequence)
    if args.oracle and len(s) > ORACLE_BOUND:
        raise UsageError(f"--oracle supports sequences of length <= {ORACLE_BOUND}")
    c = classify(s, oracle=args.oracle)
    return {"sequence": list(s.terms), **c.to_json()}, EXIT_OK


def cmd_realize(args: argparse.Namespace) -> tuple[Any, int]:
    s = _sequence(args.sequence)
    if len(s) > ENUM_BOUND:
        raise UsageError(f"realization supports sequences of length <= {ENUM_BOUND}")
    g = realize_3connected(s)
    return {"sequence": list(s.terms), "graph6": None if g is None else graph6_encode(g)}, EXIT_OK


def _check_one(g: Graph) -> dict:
    if g.order < 2:
        return {"graph6": graph6_encode(g), "order": g.order, "size": g.size, "connectivity": 0, "is_3_connected": False}
    kappa = vertex_connectivity(g)
    out: dict[str, Any] = {
        "graph6": graph6_encode(g),
        "order": g.order,
        "size": g.size,
        "connectivity": kappa,
        "is_3_connected": is_3_connected(g),
    }
    if kappa <= 2:
        cut = find_small_cut(g, 2)
        out["cut"] = None if cut is None else list(cut.vertices)
    else:
        u, v = next(((a, b) for a, b in combinations(range(g.order), 2) if not g.has_edge(a, b)), (0, 1))
        w = max_disjoint_paths(g, u, v)
        out["paths"] = {"u": u, "v": v, "paths": [list(p) for p in w.paths]}
    return out


def cmd_check(args: argparse.Namespace) -> tuple[Any, int]:
    results = [_check_one(g) for g in _graphs(args)]
    return results[0] if len(results) == 1 else results, EXIT_OK


def cmd_trace(args: argparse.Namespace) -> tuple[Any, int]:
    out = []
    for g in _graphs(args):
        if g.order > ENUM_BOUND:
            raise UsageError(f"tracing supports order <= {ENUM_BOUND}")
        try:
            trace = find_trace(g)
        except BgOpError as exc:
            raise UsageError(f"{graph6_encode(g)}: {exc}") from exc
        h = replay_trace(trace)
        out.append({"graph6": graph6_encode(g), **trace.to_json(), "replay": graph6_encode(h), "isomorphic": are_isomorphic(g, h)})
    return out[0] if len(out) == 1 else out, EXIT_OK


def cmd_enumerate_cell(args: argparse.Namespace) -> tuple[Any, int]:
    idx = MatrixIndex(args.i, args.j)
    if idx.j < 0:
        raise UsageError("column j must be non-negative")
    order, size = cell_parameters(idx)
    if order > ENUM_BOUND:
        raise UsageError(f"cells are available for orders <= {ENUM_BOUND}")
    graphs = enumerate_cell(idx, enumerate_3connected(order))
    lo, hi = nonempty_row_range(idx.j)
    out: dict[str, Any] = {
        "i": idx.i,
        "j": idx.j,
        "order": order,
        "size": size,
        "count": len(graphs),
        "graphs": [graph6_encode(g) for g in graphs],
    }
    if not lo <= idx.i <= hi:
        out["note"] = f"row {idx.i} is outside the non-empty range [{lo}, {hi}] of column {idx.j}"
    return out, EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> tuple[Any, int]:
    top = args.order if args.order is not None else args.max_n
    if top is None:
        raise UsageError("give --order or --max-n")
    if top > ENUM_BOUND:
        raise UsageError(f"enumeration supports orders <= {ENUM_BOUND}")
    catalog = enumerate_3connected(top).to_json()
    if args.order is not None:
        catalog["cells"] = [c for c in catalog["cells"] if c["j"] + 4 == args.order]
    return catalog, EXIT_OK


def cmd_matrix(args: argparse.Namespace) -> tuple[Any, int]:
    j = args.column
    if j < 0:
        raise UsageError("column must be non-negative")
    lo, hi = nonempty_row_range(j)
    out: dict[str, Any] = {"column": j, "order": j + 4, "rows": [lo, hi], "nonempty_count": column_nonempty_count(j)}
    if j + 4 <= ENUM_BOUND:
        catalog = enumerate_3connected(j + 4)
        out["catalog_counts"] = {str(idx.i): len(catalog.graphs_in(idx)) for idx in catalog.indices() if idx.j == j}
    return out, EXIT_OK


def cmd_verify(args: argparse.Namespace) -> tuple[Any, int]:
    n = args.n if args.n is not None else args.max_n
    if n is None:
        n = DEFAULT_N[args.theorem]
    if n > MAX_N[args.theorem]:
        raise UsageError(f"max_n {n} exceeds bound {MAX_N[args.theorem]} for {args.theorem}")
    report = run_suite(args.theorem, n)
    out = report.to_json(timing=args.timing)
    unexpected = report.unexpected()
    out["unexpected_violations"] = len(unexpected)
    return out, EXIT_VIOLATIONS if unexpected else EXIT_OK


def _pretty(name: str, payload: Any) -> str:
    if name == "verify":
        lines = [
            f"theorem     {payload['theorem']}",
            f"range       {payload['parameter_range']}",
            f"verified    {payload['verified_count']}",
            f"verdict     {payload['verdict']}",
            f"violations  {len(payload['violations'])} ({payload['unexpected_violations']} unexpected)",
        ]
        for v in payload["violations"]:
            lines.append(f"  {v['kind']:<42} {json.dumps(v['input'])}")
        return "\n".join(lines)
    if name in ("enumerate-cell",):
        head = f"# p[{payload['i']},{payload['j']}]: order {payload['order']}, size {payload['size']}, {payload['count']} classes"
        extra = [f"# {payload['note']}"] if "note" in payload else []
        return "\n".join([head] + extra + payload["graphs"])
    if name == "enumerate":
        return "\n".join(g for c in payload["cells"] for g in c["graphs"])
    if isinstance(payload, dict):
        return "\n".join(f"{k:<18} {json.dumps(v)}" for k, v in payload.items())
    return "\n\n".join(_pretty(name, p) for p in payload)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    common.add_argument("--output", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--timing", action="store_true", help="include runtime in audit reports")

    parser = _Parser(prog="tricon", description="3-connected graphs, BG-operations and degree sequences")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="classify a degree sequence")
    p.add_argument("sequence", help="comma-separated degrees, e.g. 3,3,3,3")
    p.add_argument("--oracle", action="store_true", help=f"also run the exhaustive oracle (length <= {ORACLE_BOUND})")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("realize", parents=[common], help="find a 3-connected realization")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("check", parents=[common], help="connectivity report for graph6 input")
    p.add_argument("graph6", nargs="*", help="graph6 strings (default: read lines from stdin)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("trace", parents=[common], help="BG trace from K4 for graph6 input")
    p.add_argument("graph6", nargs="*")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("enumerate-cell", parents=[common], help="classes in one matrix cell")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.set_defaults(func=cmd_enumerate_cell)

    p = sub.add_parser("enumerate", parents=[common], help="catalog of 3-connected graphs")
    p.add_argument("--order", type=int, help="only this order")
    p.add_argument("--max-n", type=int, help="all orders up to this bound")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("matrix", parents=[common], help="non-empty rows of a column")
    p.add_argument("--column", type=int, required=True)
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("theorem", choices=sorted(SUITES))
    p.add_argument("n", nargs="?", type=int, help="largest order (same as --max-n)")
    p.add_argument("--max-n", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # --help exits 0; usage errors already carry EXIT_USAGE
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        payload, code = args.func(args)
    except UsageError as exc:
        print(f"tricon {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _pretty(args.command, payload) if args.pretty else json.dumps(payload, sort_keys=True)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
