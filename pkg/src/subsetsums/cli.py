"""Command-line interface: ``subsetsums <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence, TextIO

from subsetsums.analysis import (
    DEFAULT_PRECISION,
    FAMILIES,
    bound_report,
    convergence_sweep,
    uniformity_ratio,
    write_sweep_csv,
)
from subsetsums.counting import count_subset_sums, count_table
from subsetsums.group import parse_element, parse_moduli
from subsetsums.oracle import ENUM_MAX_ORDER, oracle_dp, oracle_enum, standard_family


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # raise instead of sys.exit so run() can return 2
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return v


def _orders(text: str) -> list[int]:
    try:
        return [_positive(p.strip()) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"could not parse orders {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="subsetsums",
        description="Exact counts of k-subsets of a finite abelian group with a given sum.",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("plain", "json")):
        p.add_argument("--format", choices=formats, default="plain")
        p.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    p = sub.add_parser("count", help="print N(k, b) for one target")
    p.add_argument("--moduli", required=True, help='cyclic factors, e.g. "2,2,3"')
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--target", required=True, help='residues, e.g. "1,0,2"')
    common(p, ("plain",))

    p = sub.add_parser("table", help="N(k, b) for every b in lexicographic order")
    p.add_argument("--moduli", required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    common(p, ("plain", "json", "csv"))

    p = sub.add_parser("verify", help="check the formula against brute-force oracles")
    p.add_argument("--max-order", type=_positive, default=16)
    p.add_argument("--oracle", choices=("enum", "dp", "both"), default="both")
    common(p, ("plain",))

    p = sub.add_parser("ratio", help="min/max uniformity ratio over all targets")
    p.add_argument("--moduli", required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--precision", type=_positive, default=DEFAULT_PRECISION)
    common(p)

    p = sub.add_parser("bounds", help="main term, deviation bound, vanishing expression, L value")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    common(p)

    p = sub.add_parser("sweep", help="convergence sweep as CSV")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--orders", type=_orders, required=True, help='e.g. "64,128,256"')
    p.add_argument("--k-rule", required=True, help="fixed:K or half-plus-one")
    p.add_argument("--precision", type=_positive, default=DEFAULT_PRECISION)
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(format="csv")
    return parser


def _dump_json(obj, out: TextIO) -> None:
    json.dump(obj, out, indent=2)
    out.write("\n")


def _cmd_count(args, out: TextIO, err: TextIO) -> int:
    spec = parse_moduli(args.moduli)
    b = _element(spec, args.target)
    out.write(f"{count_subset_sums(spec, args.k, b)}\n")
    return 0


def _element(spec, text):
    parts = text.split(",")
    if len(parts) != spec.rank:
        raise UsageError(
            f"target {text!r} has {len(parts)} coordinates but group {spec} has {spec.rank}\n"
        )
    return parse_element(spec, text)


def _cmd_table(args, out: TextIO, err: TextIO) -> int:
    spec = parse_moduli(args.moduli)
    table = count_table(spec, args.k)
    if args.format == "json":
        _dump_json(
            {
                "moduli": list(spec.moduli),
                "k": args.k,
                "entries": [
                    {"element": list(b.residues), "count": str(c)} for b, c in table.items()
                ],
            },
            out,
        )
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow([f"b{i + 1}" for i in range(spec.rank)] + ["count"])
        for b, c in table.items():
            w.writerow([*b.residues, c])
    else:
        for b, c in table.items():
            out.write(f"{b}\t{c}\n")
    return 0


def _cmd_verify(args, out: TextIO, err: TextIO) -> int:
    use_enum = args.oracle in ("enum", "both")
    use_dp = args.oracle in ("dp", "both")
    if args.oracle == "enum" and args.max_order > ENUM_MAX_ORDER:
        raise UsageError(f"--oracle enum supports --max-order <= {ENUM_MAX_ORDER}\n")
    specs = standard_family(args.max_order)
    tables = 0
    for spec in specs:
        n = spec.order
        for k in range(n + 1):
            formula = count_table(spec, k)
            oracles = []
            if use_enum and n <= ENUM_MAX_ORDER:
                oracles.append(("enum", oracle_enum(spec, k)))
            if use_dp:
                oracles.append(("dp", oracle_dp(spec, k)))
            for name, table in oracles:
                for b, c in formula.items():
                    if table[b] != c:
                        out.write(
                            f"MISMATCH group={spec} k={k} b={b}: formula={c} {name}={table[b]}\n"
                        )
                        return 1
            tables += 1
    out.write(
        f"ok: {len(specs)} groups, {tables} (group, k) tables, oracle={args.oracle}, "
        f"max order {args.max_order}\n"
    )
    return 0


def _cmd_ratio(args, out: TextIO, err: TextIO) -> int:
    spec = parse_moduli(args.moduli)
    rep = uniformity_ratio(spec, args.k, args.precision)
    fields = {
        "moduli": str(spec),
        "k": args.k,
        "min_count": str(rep.min_count),
        "argmin": str(rep.argmin),
        "max_count": str(rep.max_count),
        "argmax": str(rep.argmax),
        "ratio": str(rep.ratio),
        "ratio_decimal": rep.ratio_decimal,
    }
    if args.format == "json":
        fields["argmin"] = list(rep.argmin.residues)
        fields["argmax"] = list(rep.argmax.residues)
        _dump_json(fields, out)
    else:
        for key, v in fields.items():
            out.write(f"{key}: {v}\n")
    return 0


def _cmd_bounds(args, out: TextIO, err: TextIO) -> int:
    rep = bound_report(args.n, args.k)
    fields = {
        "n": rep.n,
        "k": rep.k,
        "main_term": str(rep.main_term),
        "deviation_bound": None if rep.deviation_bound is None else str(rep.deviation_bound),
        "vanishing_expr": rep.vanishing_expr,
        "l_value": rep.l_value,
        "binomial_ratio_holds": rep.binomial_ratio_holds,
    }
    fields = {key: v for key, v in fields.items() if v is not None}
    if args.format == "json":
        _dump_json(fields, out)
    else:
        for key, v in fields.items():
            out.write(f"{key}: {str(v).lower() if isinstance(v, bool) else v}\n")
    return 0


def _cmd_sweep(args, out: TextIO, err: TextIO) -> int:
    rows = convergence_sweep(args.family, args.orders, args.k_rule, args.precision)
    for row in rows:
        if row.error:
            err.write(f"skipped n={row.n}: {row.error}\n")
    write_sweep_csv(rows, out)
    return 0


COMMANDS = {
    "count": _cmd_count,
    "table": _cmd_table,
    "verify": _cmd_verify,
    "ratio": _cmd_ratio,
    "bounds": _cmd_bounds,
    "sweep": _cmd_sweep,
}


def run(argv: Sequence[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except UsageError as exc:
        stderr.write(str(exc))
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    buf = io.StringIO()
    try:
        code = COMMANDS[args.command](args, buf, stderr)
    except (UsageError, ValueError) as exc:
        stderr.write(parser.format_usage())
        stderr.write(f"subsetsums {args.command}: error: {str(exc).rstrip()}\n")
        return 2

    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        stdout.write(buf.getvalue())
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
