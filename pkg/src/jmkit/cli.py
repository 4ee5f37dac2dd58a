"""Command-line interface.

Exit codes: 0 success, 1 an identity failed, 2 bad usage, 3 guard exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time

from .characters import GuardError, character_table, check_guard
from .identities import IDENTITIES, sweep, summarize
from .partitions import format_partition, parse_partition, rimhook_additions, rimhook_removals
from .symfunc import (
    SchurExpansion,
    lhs_eq3,
    lhs_eq6,
    lhs_t3,
    mult_p,
    rhs_eq3,
    rhs_eq6,
    rhs_t3,
    skew_Dp,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _suite_names(values: list[str]) -> list[str]:
    names = []
    for value in values:
        for token in value.split(","):
            token = token.strip().upper().replace("-", "_")
            if not token:
                continue
            if token == "ALL":
                names.extend(IDENTITIES)
            elif token in IDENTITIES:
                names.append(token)
            else:
                raise UsageError(f"unknown suite {token.lower()!r}; choose from "
                                 + ", ".join(i.lower() for i in IDENTITIES) + ", all")
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="jmkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--output", metavar="PATH", help="write here instead of stdout")

    p = sub.add_parser("char-table", help="character table of S_n")
    p.add_argument("--n", type=int, required=True)
    common(p, ["text", "csv", "json"])

    p = sub.add_parser("schur", help="apply a rimhook operator to s_lambda")
    p.add_argument("--op", required=True, choices=["mult-p", "skew-dp", "eq3", "eq6", "t3"])
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--j", type=int)
    p.add_argument("--side", choices=["lhs", "rhs"], default="lhs",
                   help="for eq3/eq6/t3: operator side or content side")
    common(p, ["json", "text"])

    p = sub.add_parser("verify", help="run identity sweeps")
    p.add_argument("--suite", action="append", required=True,
                   help="identity name(s), comma separated, or 'all'")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_partition_arg)
    p.add_argument("--type", dest="typ", type=_partition_arg)
    p.add_argument("--zeta", type=_partition_arg)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--stable", action="store_true", help="omit timing fields")
    common(p, ["json", "text", "csv"])

    p = sub.add_parser("rimhooks", help="list rimhook removals or additions")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--mode", choices=["remove", "add"], required=True)
    common(p, ["text", "json"])
    return parser


def cmd_char_table(args) -> tuple[int, str]:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    table = character_table(args.n)
    if args.format == "csv":
        return EXIT_OK, table.to_csv()
    if args.format == "json":
        return EXIT_OK, json.dumps(table.to_json()) + "\n"
    return EXIT_OK, table.to_text()


_SCHUR_OPS = {"eq3": (lhs_eq3, rhs_eq3), "eq6": (lhs_eq6, rhs_eq6), "t3": (lhs_t3, rhs_t3)}


def cmd_schur(args) -> tuple[int, str]:
    lam = args.lam
    if args.op in ("mult-p", "skew-dp"):
        if args.j is None or args.j < 1:
            raise UsageError(f"--op {args.op} needs a positive --j")
        base = SchurExpansion.basis_element(lam)
        result = mult_p(base, args.j) if args.op == "mult-p" else skew_Dp(base, args.j)
    else:
        minimum = 2 if args.op == "eq6" else (1 if args.op == "eq3" else 0)
        if sum(lam) < minimum:
            raise UsageError(f"--op {args.op} needs |lambda| >= {minimum}")
        lhs, rhs = _SCHUR_OPS[args.op]
        result = (lhs if args.side == "lhs" else rhs)(lam)
    if args.format == "text":
        return EXIT_OK, repr(result) + "\n"
    return EXIT_OK, result.dumps() + "\n"


def cmd_verify(args) -> tuple[int, str]:
    if args.n < 1:
        raise UsageError("--n must be at least 1")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    suites = _suite_names(args.suite)
    filters = {}
    if args.lam is not None:
        filters["lambda"] = args.lam
    if args.typ is not None:
        filters["type"] = args.typ
    if args.zeta is not None:
        filters["zeta"] = args.zeta
    check_guard(args.n)
    start = time.perf_counter()
    records = sweep(args.n, suites, jobs=args.jobs, filters=filters)
    summary = summarize(records, stable=args.stable, elapsed=time.perf_counter() - start)
    if args.format == "json":
        lines = [r.dumps(stable=args.stable) for r in records] + [json.dumps(summary)]
        text = "\n".join(lines) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["identity", "n", "inputs", "lhs", "rhs", "ok"])
        for r in records:
            data = r.to_json(stable=True)
            inputs = ";".join(f"{k}={_fmt(v)}" for k, v in r.inputs.items())
            writer.writerow([r.identity, r.n, inputs, json.dumps(data["lhs"]),
                             json.dumps(data["rhs"]), r.ok])
        text = buf.getvalue()
    else:
        lines = []
        for r in records:
            inputs = " ".join(f"{k}=({_fmt(v)})" for k, v in r.inputs.items())
            lines.append(f"{'ok  ' if r.ok else 'FAIL'} {r.identity} n={r.n} {inputs}")
        lines.append(f"{summary['passed']}/{summary['total']} passed")
        text = "\n".join(lines) + "\n"
    return (EXIT_OK if summary["failed"] == 0 else EXIT_FAIL), text


def _fmt(value) -> str:
    return format_partition(value) if isinstance(value, tuple) else str(value)


def cmd_rimhooks(args) -> tuple[int, str]:
    if args.length < 1:
        raise UsageError("--length must be positive")
    fn = rimhook_removals if args.mode == "remove" else rimhook_additions
    found = fn(args.lam, args.length)
    if args.format == "json":
        return EXIT_OK, json.dumps([{"partition": list(nu), "height": h} for nu, h in found]) + "\n"
    return EXIT_OK, "".join(f"({format_partition(nu)}) ht {h}\n" for nu, h in found)


COMMANDS = {
    "char-table": cmd_char_table,
    "schur": cmd_schur,
    "verify": cmd_verify,
    "rimhooks": cmd_rimhooks,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        status, text = COMMANDS[args.command](args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"jmkit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardError as exc:
        print(f"jmkit: {exc}", file=sys.stderr)
        return EXIT_GUARD
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
