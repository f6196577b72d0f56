"""Command-line interface: construct, verify, connectivity, sweep, fixtures.

Exit codes: 0 when the property holds (or the command succeeded), 1 when a
verification fails with a witness, 2 on any error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, fields
from math import comb
from pathlib import Path
from typing import Sequence

from kcbg.bigraph import BipartiteGraph, FORMATS, degree_stats, format_for_path, parse, serialize
from kcbg.connectivity import check_connectivity_bounds, kappa, kappa_U, kappa_V
from kcbg.constructions import FAMILIES, ConstructionSpec, construct
from kcbg.criticality import METHODS, subset_budget, verify
from kcbg.errors import KCBGError
from kcbg.fixtures import FIXTURES, fixture_graph

BRUTEFORCE_SWEEP_MAX_N = 14
HALL_SWEEP_MAX_M = 24


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _load(path: str, fmt: str | None) -> BipartiteGraph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse(text, fmt or format_for_path(path))


def cmd_construct(args: argparse.Namespace) -> int:
    G = construct(args.family, args.n, args.m, a=args.a, b=args.b, c=args.c, kappa=args.kappa)
    _emit(serialize(G, args.format), args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    G = _load(args.graph, args.format)
    methods = METHODS if args.method == "all" else (args.method,)
    reports = [verify(G, method, force=args.force) for method in methods]
    if len(reports) == 1:
        payload = reports[0].to_dict()
    else:
        payload = {
            "verdict": all(r.verdict for r in reports),
            "agree": len({r.verdict for r in reports}) == 1,
            "reports": [r.to_dict() for r in reports],
        }
    _emit(json.dumps(payload, indent=2) + "\n", args.output)
    if len({r.verdict for r in reports}) != 1:
        return 2
    return 0 if reports[0].verdict else 1


def cmd_connectivity(args: argparse.Namespace) -> int:
    G = _load(args.graph, args.format)
    report = check_connectivity_bounds(G, require_kcb=False)
    _emit(json.dumps(report.to_dict(), indent=2) + "\n", args.output)
    return 0


@dataclass
class SweepRow:
    n: int
    m: int
    k: int
    family: str
    edge_count: int | None = None
    Delta_U: int | None = None
    delta_U: int | None = None
    Delta_V: int | None = None
    kcb_bruteforce: bool | None = None
    kcb_hall: bool | None = None
    kcb_fast: bool | None = None
    kappa: int | None = None
    kappa_U: int | None = None
    kappa_V: int | None = None
    time_bruteforce: float | None = None
    time_hall: float | None = None
    time_fast: float | None = None
    error: str = ""

    def verdicts(self) -> list[bool]:
        return [v for v in (self.kcb_bruteforce, self.kcb_hall, self.kcb_fast) if v is not None]


TIMING_COLUMNS = ("time_bruteforce", "time_hall", "time_fast")


def sweep_row(family: str, n: int, m: int, params: dict | None = None) -> SweepRow:
    """Build one family instance and evaluate every applicable verifier on it."""
    row = SweepRow(n, m, n - m, family)
    try:
        G = ConstructionSpec(family, n, m, dict(params or {})).build()
    except KCBGError as exc:
        row.error = str(exc)
        return row
    stats = degree_stats(G)
    row.edge_count, row.Delta_U, row.delta_U, row.Delta_V = (
        stats.edge_count, stats.Delta_U, stats.delta_U, stats.Delta_V)
    budget = subset_budget()
    try:
        if n <= BRUTEFORCE_SWEEP_MAX_N and comb(n, n - m) <= budget:
            rep = verify(G, "bruteforce")
            row.kcb_bruteforce, row.time_bruteforce = rep.verdict, rep.wall_time
        if m <= HALL_SWEEP_MAX_M:
            rep = verify(G, "hall")
            row.kcb_hall, row.time_hall = rep.verdict, rep.wall_time
        rep = verify(G, "fast")
        row.kcb_fast, row.time_fast = rep.verdict, rep.wall_time
        row.kappa, row.kappa_U, row.kappa_V = kappa(G), kappa_U(G), kappa_V(G)
    except KCBGError as exc:
        row.error = str(exc)
    if len(set(row.verdicts())) > 1:
        row.error = "verifier disagreement"
    return row


def _sweep_task(task: tuple[str, int, int, dict]) -> SweepRow:
    return sweep_row(*task)


def _parse_range(text: str) -> range:
    if "-" in text:
        lo, hi = text.split("-", 1)
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def sweep_tasks(n_range: range, m_range: range | None, families: Sequence[str],
                params: dict | None = None) -> list[tuple[str, int, int, dict]]:
    tasks = []
    for n in n_range:
        ms = m_range if m_range is not None else range(2, n)
        for m in ms:
            if not n > m > 1:
                continue
            for family in families:
                tasks.append((family, n, m, dict(params or {})))
    return tasks


def rows_to_csv(rows: Sequence[SweepRow], timings: bool = False) -> str:
    names = [f.name for f in fields(SweepRow) if timings or f.name not in TIMING_COLUMNS]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=names, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        record = asdict(row)
        writer.writerow({
            key: ("" if record[key] is None else
                  f"{record[key]:.6f}" if isinstance(record[key], float) else record[key])
            for key in names
        })
    return buf.getvalue()


def run_sweep(tasks: Sequence[tuple[str, int, int, dict]], jobs: int = 1) -> list[SweepRow]:
    if jobs <= 1:
        return [_sweep_task(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_sweep_task, tasks, chunksize=4))


def cmd_sweep(args: argparse.Namespace) -> int:
    families = [f for spec in args.family for f in spec.split(",") if f] or ["bar"]
    for family in families:
        if family not in FAMILIES:
            raise KCBGError(f"unknown family {family!r}")
    params = {key: getattr(args, key) for key in ("a", "b", "c", "kappa")
              if getattr(args, key) is not None}
    tasks = sweep_tasks(_parse_range(args.n), _parse_range(args.m) if args.m else None,
                        families, params)
    start = time.perf_counter()
    rows = run_sweep(tasks, args.jobs)
    _emit(rows_to_csv(rows, timings=args.timings), args.output)
    print(f"{len(rows)} rows in {time.perf_counter() - start:.2f}s", file=sys.stderr)
    return 0


def cmd_fixtures(args: argparse.Namespace) -> int:
    out = Path(args.output or ".")
    out.mkdir(parents=True, exist_ok=True)
    for name in FIXTURES:
        path = out / f"{name}.edgelist"
        path.write_text(serialize(fixture_graph(name), "edgelist"))
        print(path)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kcbg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def params(p: argparse.ArgumentParser) -> None:
        p.add_argument("--a", type=int)
        p.add_argument("--b", type=int)
        p.add_argument("--c", type=int)
        p.add_argument("--kappa", type=int)

    p = sub.add_parser("construct", help="generate a graph family instance")
    p.add_argument("family", nargs="?", choices=FAMILIES)
    p.add_argument("--family", dest="family_opt", choices=FAMILIES)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    params(p)
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="decide k-critical-bipartiteness")
    p.add_argument("graph", help="graph file, or - for stdin")
    p.add_argument("--method", choices=(*METHODS, "all"), default="fast")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--force", action="store_true", help="ignore enumeration budgets")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("connectivity", help="connectivity report")
    p.add_argument("graph")
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--output")
    p.set_defaults(func=cmd_connectivity)

    p = sub.add_parser("sweep", help="tabulate families over a range of orders")
    p.add_argument("--n", required=True, help="N or LO-HI")
    p.add_argument("--m", help="M or LO-HI (default 2..n-1)")
    p.add_argument("--family", action="append", default=[], help="family name(s), comma separated")
    params(p)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timings", action="store_true", help="add per-method runtime columns")
    p.add_argument("--output")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fixtures", help="write the reference graphs as edge lists")
    p.add_argument("--output", help="directory (default .)")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "construct":
        args.family = args.family or args.family_opt
        if args.family is None:
            parser.error("construct needs a family")
    try:
        return args.func(args)
    except (KCBGError, OSError) as exc:
        print(f"kcbg: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
