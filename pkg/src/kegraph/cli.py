"""Command-line surface: analyze, batch, gen, verify.

Exit codes: 0 success, 1 verify violation, 2 parse/parameter error,
3 size-gated fields omitted without --force.
"""

from __future__ import annotations

import argparse
import multiprocessing
import os
import sys
import warnings

from .errors import BadParamsError, KegraphError, ParseError, UnknownNameError
from .fixtures import FAMILIES, FIXTURE_NAMES, fixture, generate
from .formats import emit_graph6, parse_edge_list, parse_graph6
from .graph import Graph
from .independence import DEFAULT_EXACT_LIMIT, DEFAULT_OMEGA_CAP
from .report import CSV_COLUMNS, analyze_graph, csv_row
from .verify import DEFAULT_SEED, run_suite

__all__ = ["main"]


def _env_seed() -> int:
    try:
        return int(os.environ.get("KEG_SEED", DEFAULT_SEED))
    except ValueError:
        return DEFAULT_SEED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kegraph",
        description=(
            "Matching and independence invariants, critical independent sets, "
            "and Konig-Egervary recognition with certificates."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="full report for a single graph")
    src = pa.add_mutually_exclusive_group()
    src.add_argument("path", nargs="?", default="-",
                     help="input file, or - for stdin (default)")
    src.add_argument("--fixture", choices=FIXTURE_NAMES,
                     help="analyze a named fixture instead of reading input")
    pa.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    out = pa.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="JSON output (default)")
    out.add_argument("--csv", action="store_true", help="CSV output")
    pa.add_argument("--force", action="store_true",
                    help="lift the exact-solver size gate")
    pa.add_argument("--oracle", action="store_true",
                    help="cross-check against brute force (small graphs)")
    pa.add_argument("--seed", type=int, default=None)
    pa.add_argument("--cap", type=int, default=DEFAULT_OMEGA_CAP)

    pb = sub.add_parser("batch", help="CSV stream of reports for graph6 lines")
    pb.add_argument("path", help="file of graph6 records, one per line")
    pb.add_argument("--jobs", type=int, default=1,
                    help="parallel workers; output order is preserved")
    pb.add_argument("--poly-only", action="store_true",
                    help="polynomial fields only (skip alpha/core/chain)")
    pb.add_argument("--force", action="store_true")
    pb.add_argument("--oracle", action="store_true")
    pb.add_argument("--seed", type=int, default=None)
    pb.add_argument("--cap", type=int, default=DEFAULT_OMEGA_CAP)

    pg = sub.add_parser("gen", help="emit a family member as graph6")
    pg.add_argument("family", choices=FAMILIES)
    pg.add_argument("params", nargs="*", type=int)
    pg.add_argument("--seed", type=int, default=None)

    pv = sub.add_parser("verify", help="run the self-check suites")
    pv.add_argument("--scope", choices=("quick", "full"), default="quick")
    pv.add_argument("--seed", type=int, default=None)
    pv.add_argument("--cap", type=int, default=DEFAULT_OMEGA_CAP)

    return parser


def _read_graph(args: argparse.Namespace) -> tuple[Graph, str]:
    if args.fixture:
        return fixture(args.fixture), args.fixture
    if args.path == "-":
        text = sys.stdin.read()
        name = "stdin"
    else:
        with open(args.path, encoding="utf-8") as fh:
            text = fh.read()
        name = os.path.basename(args.path)
    if args.format == "edges":
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            g = parse_edge_list(text)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return g, name
    return parse_graph6(text.strip()), name


def _cmd_analyze(args: argparse.Namespace) -> int:
    try:
        g, name = _read_graph(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = analyze_graph(
        g,
        name=name,
        exact_limit=DEFAULT_EXACT_LIMIT,
        force=args.force,
        with_oracle=args.oracle,
    )
    if args.csv:
        print(",".join(CSV_COLUMNS))
        print(csv_row(report))
    else:
        print(report.to_json(indent=2))
    return 3 if report.gated else 0


_WORKER_CONFIG: dict[str, bool] = {}


def _init_batch_worker(force: bool, poly_only: bool, with_oracle: bool) -> None:
    _WORKER_CONFIG.update(force=force, poly_only=poly_only, with_oracle=with_oracle)


def _batch_one(item: tuple[int, str]) -> tuple[int, str, str, bool | None, bool | None]:
    lineno, line = item
    try:
        g = parse_graph6(line)
        report = analyze_graph(
            g,
            name=line,
            force=_WORKER_CONFIG["force"],
            poly_only=_WORKER_CONFIG["poly_only"],
            with_oracle=_WORKER_CONFIG["with_oracle"],
        )
        chain_holds = report.chain["chain_holds"] if report.chain else None
        return lineno, csv_row(report), "", report.is_ke, chain_holds
    except KegraphError as exc:
        return lineno, "", f"line {lineno}: {exc}", None, None


def _cmd_batch(args: argparse.Namespace) -> int:
    try:
        with open(args.path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    items = [
        (lineno, line.strip())
        for lineno, line in enumerate(lines, start=1)
        if line.strip()
    ]
    _init_batch_worker(args.force, args.poly_only, args.oracle)
    if args.jobs > 1 and len(items) > 1:
        with multiprocessing.Pool(
            args.jobs,
            initializer=_init_batch_worker,
            initargs=(args.force, args.poly_only, args.oracle),
        ) as pool:
            results = pool.imap(_batch_one, items, chunksize=64)
            parsed = _emit_batch(results)
    else:
        parsed = _emit_batch(map(_batch_one, items))
    return 0 if parsed else 2


def _emit_batch(results) -> int:
    print(",".join(CSV_COLUMNS))
    parsed = ke = chain_non_ke = 0
    for lineno, row, err, is_ke, chain_holds in results:
        if err:
            print(err, file=sys.stderr)
            continue
        parsed += 1
        if is_ke:
            ke += 1
        elif chain_holds:
            chain_non_ke += 1
        print(row)
    other = parsed - ke - chain_non_ke
    print(f"#summary total={parsed} ke={ke} chain_holds_non_ke={chain_non_ke} other={other}")
    return parsed


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = generate(args.family, *args.params)
    except (BadParamsError, UnknownNameError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(emit_graph6(g))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    violation = run_suite(
        args.scope, seed, log=lambda msg: print(msg, file=sys.stderr), cap=args.cap
    )
    if violation is None:
        print(f"verify {args.scope}: all checks passed", file=sys.stderr)
        return 0
    print(f"violation in {violation.check}: {violation.detail}", file=sys.stderr)
    if violation.graph is not None:
        print(emit_graph6(violation.graph))
    return 1


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if getattr(args, "seed", None) is None and hasattr(args, "seed"):
        args.seed = _env_seed()
    handlers = {
        "analyze": _cmd_analyze,
        "batch": _cmd_batch,
        "gen": _cmd_gen,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
