"""Command-line front end.

Commands: ``test`` (graphicality verdict), ``realize`` (build a witness
graph), ``table`` (exact count tables), ``histogram`` (rejection-round
and leading-element distributions), ``count`` (graphical-sequence
counting run) and ``filter-census`` (per-length filter acceptances).

Every run emits exactly one record, JSON by default or CSV with
``--format csv``.  Counts are serialized as decimal strings so consumers
never lose precision.  Exit codes: 0 = graphical / success, 1 = not
graphical, 2 = invalid input or exceeded budget.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence

from .counting import count_even, count_regular_n
from .enumeration import (
    b1_distribution,
    census_table,
    count_graphical,
    default_threads,
    egj_round_histogram,
    filter_census,
)
from .errors import BudgetExceededError, DegseqError
from .filters import composite_test
from .sequence import make_sequence
from .testers import ALGORITHMS, is_graphical, realize

SCHEMA_VERSION = "1"
ENUM_BUDGET = 15
_ENUM_COLUMNS = ("Ez", "Bz", "Fz", "Gz", "G")
_ALL_COLUMNS = ("R", "E", "ratios") + _ENUM_COLUMNS


def ratio_string(num: int, den: int, digits: int = 13) -> str:
    """Decimal string of num/den with a fixed number of fractional digits.

    Rounded half-up in exact integer arithmetic.
    """
    scale = 10**digits
    q = (2 * num * scale + den) // (2 * den)
    return f"{q // scale}.{q % scale:0{digits}d}"


def _parse_sequence(text: str, sort: bool) -> Any:
    parts = [p for p in text.replace(" ", ",").split(",") if p]
    values = [int(p) for p in parts]
    if sort:
        values.sort(reverse=True)
    return make_sequence(values)


def _emit(record: dict, fmt: str, rows: list[dict] | None = None) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(record, separators=(",", ":")) + "\n")
        return
    # CSV: tabular commands emit their row list, others a one-row table.
    table = rows if rows is not None else [record["payload"]]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(table[0].keys()), lineterminator="\n")
    writer.writeheader()
    for row in table:
        writer.writerow(row)
    sys.stdout.write(buf.getvalue())


def _record(command: str, payload: dict) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "payload": payload}


def _check_budget(n: int, override: bool, what: str) -> None:
    if n > ENUM_BUDGET and not override:
        raise BudgetExceededError(
            f"{what} for n={n} exceeds the default budget of {ENUM_BUDGET}; "
            "pass --budget-override to run anyway"
        )
    if n > ENUM_BUDGET:
        print(f"warning: n={n} beyond default budget, this may take long", file=sys.stderr)


def _cmd_test(args: argparse.Namespace) -> int:
    seq = _parse_sequence(args.sequence, args.sort)
    payload: dict[str, Any] = {
        "sequence": list(seq.values),
        "n": seq.n,
        "algorithm": args.algorithm,
    }
    if args.algorithm == "composite":
        verdict = composite_test(seq, include_full_degree=args.full_degree)
        payload["graphical"] = False if not verdict.passed else None
        payload["rejected_by"] = verdict.rejected_by
        payload["witness_index"] = verdict.witness_index
        exit_code = 1 if not verdict.passed else 0
    else:
        report = is_graphical(seq, args.algorithm)
        payload["graphical"] = report.graphical
        payload["rounds"] = report.rounds
        payload["witness_index"] = report.witness_index
        exit_code = 0 if report.graphical else 1
    _emit(_record("test", payload), args.format)
    return exit_code


def _cmd_realize(args: argparse.Namespace) -> int:
    seq = _parse_sequence(args.sequence, args.sort)
    graph = realize(seq)
    payload: dict[str, Any] = {
        "sequence": list(seq.values),
        "n": seq.n,
        "graphical": graph is not None,
        "edges": None if graph is None else [f"{u}-{v}" for u, v in sorted(graph.edges)],
    }
    if args.format == "csv" and payload["edges"] is not None:
        payload = dict(payload, edges=";".join(payload["edges"]))
    _emit(_record("realize", payload), args.format)
    return 0 if graph is not None else 1


def _cmd_table(args: argparse.Namespace) -> int:
    if args.max_n < 1:
        raise DegseqError("--max-n must be at least 1")
    columns = [c for c in args.columns.split(",") if c]
    for c in columns:
        if c not in _ALL_COLUMNS:
            raise DegseqError(f"unknown column {c!r}; choose from {','.join(_ALL_COLUMNS)}")
    need_enum = [c for c in columns if c in _ENUM_COLUMNS]
    if need_enum:
        _check_budget(args.max_n, args.budget_override, f"columns {','.join(need_enum)}")
        census = census_table(args.max_n, threads=args.threads)
    rows = []
    for n in range(1, args.max_n + 1):
        row: dict[str, Any] = {"n": n}
        for c in columns:
            if c == "R":
                row["R"] = str(count_regular_n(n))
            elif c == "E":
                row["E"] = str(count_even(n))
            elif c == "ratios":
                row["E_over_R"] = ratio_string(count_even(n), count_regular_n(n))
            elif c == "Ez":
                row["Ez"] = str(census[n - 1].e_z)
            elif c == "Bz":
                row["Bz"] = str(census[n - 1].b_z)
            elif c == "Fz":
                row["Fz"] = str(census[n - 1].f_z)
            elif c == "Gz":
                row["Gz"] = str(census[n - 1].g_z_new)
            elif c == "G":
                row["G"] = str(census[n - 1].g)
        rows.append(row)
    _emit(_record("table", {"max_n": args.max_n, "columns": columns, "rows": rows}),
          args.format, rows)
    return 0


def _cmd_histogram(args: argparse.Namespace) -> int:
    _check_budget(args.n, args.budget_override, f"histogram {args.metric}")
    if args.metric == "egj-rounds":
        report = egj_round_histogram(args.n, threads=args.threads)
        values = list(report.rounds_histogram or ())
    else:
        report = b1_distribution(args.n, threads=args.threads)
        values = list(report.per_b1 or ())
    payload = {"n": args.n, "metric": args.metric, "values": [str(v) for v in values]}
    rows = [{"index": i + (0 if args.metric == "b1" else 1), "count": v}
            for i, v in enumerate(values)]
    _emit(_record("histogram", payload), args.format, rows)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    _check_budget(args.n, args.budget_override, "counting run")
    report = count_graphical(
        args.n, algorithm=args.algorithm, threads=args.threads, checkpoint=args.checkpoint
    )
    payload = {
        "n": args.n,
        "algorithm": report.algorithm,
        "threads": args.threads,
        "zerofree_graphical": str(report.accepted),
        "graphical_total": str(report.derived_total),
        "total_seen": str(report.total_seen),
        "per_b1": [str(v) for v in (report.per_b1 or ())],
    }
    if args.format == "csv":
        payload = dict(payload, per_b1=";".join(payload["per_b1"]))
    _emit(_record("count", payload), args.format)
    return 0


def _cmd_filter_census(args: argparse.Namespace) -> int:
    _check_budget(args.n, args.budget_override, "filter census")
    c = filter_census(args.n, threads=args.threads)
    payload = {
        "n": c.n,
        "total_even": str(c.total_even),
        "binomial_new": str(c.binomial_new),
        "composite_new": str(c.composite_new),
        "composite_full_new": str(c.composite_full_new),
        "graphical_new": str(c.graphical_new),
    }
    _emit(_record("filter-census", payload), args.format)
    return 0


def _add_common(p: argparse.ArgumentParser, threads: bool = False) -> None:
    p.add_argument("--format", choices=("json", "csv"), default="json")
    if threads:
        p.add_argument("--threads", type=int, default=default_threads(),
                       help="worker threads (default: DEGSEQ_THREADS or CPU count)")
        p.add_argument("--budget-override", action="store_true",
                       help="allow enumerations beyond the default size budget")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degseq", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    algo_names = [a.lower() for a in ALGORITHMS] + ["composite"]
    p = sub.add_parser("test", help="decide whether a sequence is graphical")
    p.add_argument("--sequence", required=True, help="comma-separated degrees")
    p.add_argument("--algorithm", choices=algo_names, default="egl")
    p.add_argument("--sort", action="store_true", help="sort the input descending first")
    p.add_argument("--full-degree", action="store_true",
                   help="include the full-degree check in the composite filter")
    _add_common(p)
    p.set_defaults(fn=_cmd_test)

    p = sub.add_parser("realize", help="construct a graph with the given degrees")
    p.add_argument("--sequence", required=True)
    p.add_argument("--sort", action="store_true")
    _add_common(p)
    p.set_defaults(fn=_cmd_realize)

    p = sub.add_parser("table", help="exact count tables by sequence length")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--columns", default="R,E",
                   help=f"comma-separated subset of {','.join(_ALL_COLUMNS)}")
    _add_common(p, threads=True)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("histogram", help="rejection-round or leading-element histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--metric", choices=("egj-rounds", "b1"), required=True)
    _add_common(p, threads=True)
    p.set_defaults(fn=_cmd_histogram)

    p = sub.add_parser("count", help="count graphical sequences of length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--algorithm", default="egl",
                   choices=[a.lower() for a in ALGORITHMS])
    p.add_argument("--checkpoint", default=None,
                   help="append-only slice log enabling restart")
    _add_common(p, threads=True)
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("filter-census", help="filter acceptance counts for one length")
    p.add_argument("--n", type=int, required=True)
    _add_common(p, threads=True)
    p.set_defaults(fn=_cmd_filter_census)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (DegseqError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
