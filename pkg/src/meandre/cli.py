"""Command-line interface.

Subcommands
-----------
index
    Index of a seaweed (gl and sl values for series A, cycle/segment
    breakdown for series C/B).

graph
    The meander graph of a seaweed as text, json, ascii art or graphviz dot.

reduce
    The reduction chain down to a parabolic, step by step;
    --closed-form switches to the collapsed steps.

census
    The table of Frobenius class counts by rank and central-arc count.

verify
    Cross-checks: graph vs reduction indices, the Kirillov-form oracle, and
    the structural properties of the census.  Exit status 1 on any mismatch.

Usage examples
--------------
  meandre index --series C --n 10 --top 3,3 --bottom 4,5
  meandre index --series A --top 5,2,2 --bottom 2,4,3
  meandre graph --series C --n 7 --top 2,3 --bottom "" --format ascii
  meandre reduce --series C --n 10 --top 3,3 --bottom 4,5 --closed-form
  meandre census --n 7
  meandre verify --max-n 5

Environment: MEANDRE_MAX_N caps the census/verification bounds (default 12),
MEANDRE_SEED seeds the oracle sampling (default 0).  Exit codes: 0 ok,
1 verification failure, 2 usage or validation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .composition import (
    SeaweedA,
    SeaweedC,
    Series,
    make_seaweed_a,
    make_seaweed_c,
)
from .enumeration import frobenius_census
from .index import (
    index_a_from_report,
    index_c_from_report,
    parabolic_index_c,
    reduction_chain,
)
from .io_render import document, to_ascii, to_dot, to_json
from .verify import run_all

DEFAULT_MAX_N = 12


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}")


def _build_descriptor(args: argparse.Namespace) -> SeaweedA | SeaweedC:
    if args.series == "A":
        q = make_seaweed_a(args.top, args.bottom)
        if args.n is not None and args.n != q.size:
            raise ValueError(f"--n {args.n} does not match the composition total {q.size}")
        return q
    if args.n is None:
        raise ValueError("series C/B require --n")
    series = Series.SP if args.series == "C" else Series.SO_ODD
    return make_seaweed_c(args.n, args.top, args.bottom, series)


def _banner(q: SeaweedA | SeaweedC) -> str:
    if isinstance(q, SeaweedA):
        return f"seaweed: type A, top {q.top}, bottom {q.bottom}  [{q.algebra_name}]"
    label = "C" if q.series is Series.SP else "B"
    return (
        f"seaweed: type {label}, n={q.rank}, top {q.top}, bottom {q.bottom}"
        f"  [{q.algebra_name}]"
    )


def cmd_index(args: argparse.Namespace) -> int:
    q = _build_descriptor(args)
    doc = document(q)
    report = doc.report
    if isinstance(q, SeaweedA):
        gl = index_a_from_report(report)
        payload = {
            "type": "A",
            "n": q.size,
            "top": q.top.to_text(),
            "bottom": q.bottom.to_text(),
            "index_gl": gl,
            "index_sl": gl - 1,
            "cycles": report.cycles,
            "segments": report.segments,
        }
        if args.json:
            print(json.dumps(payload, separators=(",", ":")))
            return 0
        print(_banner(q))
        if args.sl:
            print(f"index (sl): {gl - 1}")
        else:
            print(f"index (gl): {gl}")
            print(f"index (sl): {gl - 1}")
        print(f"cycles: {report.cycles}")
        print(f"segments: {report.segments}")
        return 0
    if args.sl:
        raise ValueError("--sl applies to series A only")
    idx = index_c_from_report(report)
    payload = {
        "type": doc.series_label,
        "n": q.rank,
        "top": q.top.to_text(),
        "bottom": q.bottom.to_text(),
        "index": idx,
        "cycles": report.cycles,
        "segments": report.segments,
        "sigma_stable_segments": report.sigma_stable_segments,
    }
    if args.json:
        print(json.dumps(payload, separators=(",", ":")))
        return 0
    print(_banner(q))
    print(f"index: {idx}")
    print(f"cycles: {report.cycles}")
    print(
        f"segments: {report.segments} "
        f"(mirror-stable {report.sigma_stable_segments}, "
        f"other {report.loose_segments})"
    )
    return 0


def cmd_graph(args: argparse.Namespace) -> int:
    q = _build_descriptor(args)
    doc = document(q)
    if args.format == "json":
        print(to_json(doc))
    elif args.format == "ascii":
        print(to_ascii(doc, max_width=args.max_width))
    elif args.format == "dot":
        sys.stdout.write(to_dot(doc))
    else:
        print(_banner(q))
        print(f"vertices: {doc.graph.vertex_count}")
        print("top arcs:", " ".join(f"({i},{j})" for i, j in doc.graph.top_arcs))
        print("bottom arcs:", " ".join(f"({i},{j})" for i, j in doc.graph.bottom_arcs))
        print("components:")
        for comp in doc.report.components:
            verts = ",".join(str(v) for v in comp.vertices)
            tag = ""
            if doc.graph.symmetric and not comp.is_cycle:
                tag = " mirror-stable" if comp.sigma_stable else " not-mirror-stable"
            print(f"  {comp.kind.value} {{{verts}}}{tag}")
        print(f"index: {doc.index}")
    return 0


def cmd_reduce(args: argparse.Namespace) -> int:
    q = _build_descriptor(args)
    if isinstance(q, SeaweedA):
        raise ValueError("reduce applies to series C/B descriptors")
    chain = reduction_chain(q, closed_form=args.closed_form)
    side = chain.terminal.top if chain.terminal.top.parts else chain.terminal.bottom
    terminal_index = parabolic_index_c(chain.terminal.rank, side)
    if args.json:
        payload = {
            "type": "C" if q.series is Series.SP else "B",
            "n": q.rank,
            "top": q.top.to_text(),
            "bottom": q.bottom.to_text(),
            "steps": [
                {
                    "rule": step.rule.value,
                    "swapped": step.swapped,
                    "p": step.witness_p,
                    "before": str(step.before),
                    "after": str(step.after),
                    "delta": step.index_delta,
                }
                for step in chain.steps
            ],
            "terminal": str(chain.terminal),
            "terminal_index": terminal_index,
            "index": chain.total_index,
        }
        print(json.dumps(payload, separators=(",", ":")))
        return 0
    print(_banner(q))
    for pos, step in enumerate(chain.steps, start=1):
        rule = step.rule.value
        if step.witness_p is not None:
            rule += f" p={step.witness_p}"
        if step.swapped:
            rule += " (swapped)"
        print(f"  {pos}. {rule:<26} {step.before}  ->  {step.after}  [+{step.index_delta}]")
    print(f"terminal: {chain.terminal} parabolic, index {terminal_index}")
    print(f"index: {chain.total_index}")
    return 0


def _census_table(rows) -> str:
    nmax = rows[-1].n
    cell = max(
        len(str(v)) for row in rows for v in (*row.by_k, row.total, row.n)
    )
    cell = max(cell, len(str(nmax)))
    label_width = max(3, len(str(nmax)))
    header = "n\\k".ljust(label_width) + "".join(
        f"{k:>{cell + 2}}" for k in range(1, nmax + 1)
    )
    header += " |" + f"{'F_n':>{cell + 2}}"
    lines = [header]
    for row in rows:
        cells = [str(v) for v in row.by_k] + ["-"] * (nmax - row.n)
        line = str(row.n).ljust(label_width) + "".join(f"{c:>{cell + 2}}" for c in cells)
        line += " |" + f"{row.total:>{cell + 2}}"
        lines.append(line)
    return "\n".join(lines)


def cmd_census(args: argparse.Namespace) -> int:
    max_n = _env_int("MEANDRE_MAX_N", DEFAULT_MAX_N)
    if not 1 <= args.n <= max_n:
        raise ValueError(f"--n must lie in 1..{max_n} (MEANDRE_MAX_N), got {args.n}")
    rows = [frobenius_census(n, ordered=args.ordered) for n in range(1, args.n + 1)]
    if args.json:
        print(
            json.dumps(
                [{"n": r.n, "by_k": list(r.by_k), "total": r.total} for r in rows],
                separators=(",", ":"),
            )
        )
    else:
        print(_census_table(rows))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    max_n = _env_int("MEANDRE_MAX_N", DEFAULT_MAX_N)
    for name, value in (
        ("--max-n", args.max_n),
        ("--oracle-max-n", args.oracle_max_n),
        ("--census-max-n", args.census_max_n),
    ):
        if not 1 <= value <= max_n:
            raise ValueError(f"{name} must lie in 1..{max_n} (MEANDRE_MAX_N), got {value}")
    seed = args.seed if args.seed is not None else _env_int("MEANDRE_SEED", 0)
    results = run_all(
        max_n=args.max_n,
        oracle_max_n=args.oracle_max_n,
        census_max_n=args.census_max_n,
        stable_max_n=max(args.census_max_n, 9),
        samples=args.samples,
        seed=seed,
        inject_fault=args.inject_fault,
    )
    for result in results:
        print(result)
    failed = [r for r in results if not r.passed]
    if failed:
        print(f"verify: FAIL ({len(failed)} of {len(results)} checks)", file=sys.stderr)
        return 1
    print(f"verify: PASS ({len(results)} checks)")
    return 0


def _add_descriptor_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--series",
        choices=("A", "C", "B"),
        default="C",
        help="A = gl(N); C = sp(2n); B = so(2n+1), same graphs and index as C",
    )
    parser.add_argument("--n", type=int, default=None, help="rank n (series C/B)")
    parser.add_argument("--top", default="", help='top composition, e.g. "3,3" ("" = empty)')
    parser.add_argument("--bottom", default="", help='bottom composition ("" = empty)')


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meandre",
        description="Meander graphs, seaweed indices and the Frobenius census.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_index = sub.add_parser("index", help="index of one seaweed")
    _add_descriptor_flags(p_index)
    p_index.add_argument("--json", action="store_true", help="machine-readable output")
    p_index.add_argument(
        "--sl",
        action="store_true",
        help="restrict text output to the sl index (series A only)",
    )
    p_index.set_defaults(func=cmd_index)

    p_graph = sub.add_parser("graph", help="render the meander graph")
    _add_descriptor_flags(p_graph)
    p_graph.add_argument(
        "--format",
        choices=("text", "json", "ascii", "dot"),
        default="text",
        help="output format (default text)",
    )
    p_graph.add_argument(
        "--max-width", type=int, default=200, help="column limit for ascii output"
    )
    p_graph.set_defaults(func=cmd_graph)

    p_reduce = sub.add_parser("reduce", help="reduction chain down to a parabolic")
    _add_descriptor_flags(p_reduce)
    p_reduce.add_argument(
        "--closed-form",
        action="store_true",
        help="use the collapsed steps (one per leading part, with witness p)",
    )
    p_reduce.add_argument("--json", action="store_true", help="machine-readable output")
    p_reduce.set_defaults(func=cmd_reduce)

    p_census = sub.add_parser("census", help="Frobenius class counts by rank")
    p_census.add_argument("--n", type=int, required=True, help="last rank to tabulate")
    p_census.add_argument("--json", action="store_true", help="machine-readable output")
    p_census.add_argument(
        "--ordered",
        action="store_true",
        help="count ordered pairs instead of unordered classes (debugging aid)",
    )
    p_census.set_defaults(func=cmd_census)

    p_verify = sub.add_parser("verify", help="run the cross-check suites")
    p_verify.add_argument(
        "--max-n", type=int, default=6, help="rank bound for the index cross-check"
    )
    p_verify.add_argument(
        "--oracle-max-n",
        type=int,
        default=3,
        help="exhaustive rank bound for the Kirillov oracle (plus 50 samples one rank up)",
    )
    p_verify.add_argument(
        "--census-max-n",
        type=int,
        default=7,
        help="rank bound for the per-element census checks "
        "(tail identities always use rows up to 9)",
    )
    p_verify.add_argument("--samples", type=int, default=5, help="oracle samples per seaweed")
    p_verify.add_argument(
        "--seed", type=int, default=None, help="random seed (default MEANDRE_SEED or 0)"
    )
    p_verify.add_argument(
        "--inject-fault",
        action="store_true",
        help="flip one mirror-stability bit to prove mismatches are caught (self-test)",
    )
    p_verify.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
