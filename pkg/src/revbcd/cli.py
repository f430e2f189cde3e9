"""Command line front end.

Subcommands: build, simulate, verify, metrics, compare, pareto, ledger.
Exit codes: 0 success, 1 verification failure, 2 usage, 3 I/O,
4 overflow/capacity, 5 ledger mismatch.  Randomized paths take --seed
(default from REVBCD_SEED) and are reproducible for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import costs, verify
from .designs import ADDER_DESIGNS, DESIGN_BUILDERS, build_design
from .errors import (
    CapacityError,
    InvalidArgumentError,
    InvalidBCDError,
    LedgerFormatError,
    NetlistFormatError,
)
from .ledger import (
    DEFAULT_WIDTH,
    CsvConfig,
    bcd_add,
    decode,
    encode,
    ingest_csv,
    sum_ledger,
)
from .metrics import metric_decomposition, structural_metrics
from .netlist import deserialize, serialize

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_OVERFLOW = 4
EXIT_LEDGER = 5


def _default_seed() -> int:
    raw = os.environ.get("REVBCD_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InvalidArgumentError(f"REVBCD_SEED must be an integer, got {raw!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma list of integers: {text!r}")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revbcd",
        description="Reversible BCD adder toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_build = sub.add_parser("build", help="build a design and emit its netlist")
    p_build.add_argument("--design", required=True, choices=sorted(DESIGN_BUILDERS))
    p_build.add_argument("--digits", type=int, default=1)
    p_build.add_argument("--out", type=Path, help="netlist file to write")

    p_sim = sub.add_parser("simulate", help="add two decimal operands")
    p_sim.add_argument("--design", default="dec-rca", choices=sorted(ADDER_DESIGNS))
    p_sim.add_argument("--a", required=True)
    p_sim.add_argument("--b", required=True)
    p_sim.add_argument("--cin", type=int, default=0, choices=(0, 1))
    p_sim.add_argument("--digits", type=int, help="digit width (default: fit operands)")
    p_sim.add_argument(
        "--raw-bits",
        action="store_true",
        help="treat --a/--b as little-endian bit strings (4 per digit)",
    )

    p_verify = sub.add_parser("verify", help="run the oracle suites")
    p_verify.add_argument(
        "--scope",
        default="all",
        choices=("all", "gates", "pdfa", "propagate", "metrics", "adders"),
    )
    p_verify.add_argument("--seed", type=int, default=None)
    p_verify.add_argument("--samples", type=int, default=1000)

    p_metrics = sub.add_parser("metrics", help="report structural metrics")
    src = p_metrics.add_mutually_exclusive_group(required=True)
    src.add_argument("--design", choices=sorted(DESIGN_BUILDERS))
    src.add_argument("--netlist", type=Path, help="netlist file to analyze")
    p_metrics.add_argument("--digits", type=int, default=1)
    p_metrics.add_argument("--stages", action="store_true", help="per-stage split")
    p_metrics.add_argument("--format", default="md", choices=("md", "csv"))

    p_cmp = sub.add_parser("compare", help="reproduce the comparison tables")
    p_cmp.add_argument("--metric", default="qc", choices=("qc", "delay"))
    p_cmp.add_argument("--digits", type=_int_list, default=list(costs.TABLE_NS))
    p_cmp.add_argument("--format", default="md", choices=("md", "csv"))
    p_cmp.add_argument(
        "--no-structural",
        action="store_true",
        help="omit the structural-deltas report section",
    )

    p_par = sub.add_parser("pareto", help="cost/delay trade-off points and front")
    p_par.add_argument("--digits", type=_int_list, default=[16, 32, 64])
    p_par.add_argument("--format", default="md", choices=("md", "tsv"))
    p_par.add_argument(
        "--svg-dir", type=Path, help="write pareto-N<digits>.svg files here"
    )

    p_led = sub.add_parser("ledger", help="sum a transactions CSV per group")
    p_led.add_argument("--csv", type=Path, required=True)
    p_led.add_argument("--group-col", required=True)
    p_led.add_argument("--amount-col", required=True)
    p_led.add_argument("--design", default="dec-rca", choices=sorted(ADDER_DESIGNS))
    p_led.add_argument("--width", type=int, default=DEFAULT_WIDTH)
    p_led.add_argument("--delimiter", default=",")
    p_led.add_argument("--lenient", action="store_true", help="skip bad rows")
    p_led.add_argument("--format", default="md", choices=("md", "csv"))

    return parser


def cmd_build(args) -> int:
    netlist = build_design(args.design, args.digits)
    if args.out:
        args.out.write_text(serialize(netlist), encoding="utf-8")
        print(f"wrote {args.out}")
    report = structural_metrics(netlist)
    print(f"{args.design} digits={args.digits}: {report}")
    return EXIT_OK


def _parse_operands(args) -> tuple[int, int, int]:
    if args.raw_bits:
        for text in (args.a, args.b):
            if not text or set(text) - {"0", "1"}:
                raise InvalidArgumentError(f"not a bit string: {text!r}")
        if len(args.a) != len(args.b) or len(args.a) % 4:
            raise InvalidArgumentError("bit strings need equal 4-per-digit length")
        n = len(args.a) // 4
        def from_bits(text):
            total = 0
            for j in range(n):
                digit = sum(int(text[4 * j + i]) << i for i in range(4))
                if digit > 9:
                    raise InvalidBCDError(f"digit {digit} outside 0..9")
                total += digit * 10**j
            return total
        return from_bits(args.a), from_bits(args.b), n
    try:
        a, b = int(args.a), int(args.b)
    except ValueError:
        raise InvalidArgumentError("operands must be decimal integers")
    if a < 0 or b < 0:
        raise InvalidArgumentError("operands must be non-negative")
    n = args.digits or max(len(str(a)), len(str(b)))
    return a, b, n


def cmd_simulate(args) -> int:
    a, b, n = _parse_operands(args)
    if args.digits:
        n = args.digits
    if a >= 10**n or b >= 10**n:
        raise CapacityError(f"operands do not fit in {n} digits")
    va, vb = encode(a, n), encode(b, n)
    total, carry = bcd_add(va, vb, args.design, cin=args.cin)
    print(f"design={args.design} digits={n}")
    print(f"  a     = {a}")
    print(f"  b     = {b}")
    print(f"  cin   = {args.cin}")
    print(f"  sum   = {decode(total)}")
    print(f"  carry = {carry}")
    print(f"  full  = {carry * 10**n + decode(total)}")
    bits = "".join(
        "".join(str((d >> i) & 1) for i in range(4)) for d in total.digits
    )
    print(f"  sum bits (little-endian) = {bits}")
    return EXIT_OK


def cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    results = verify.run_scope(args.scope, seed=seed, samples=args.samples)
    worst = EXIT_OK
    for res in results:
        print(f"{'PASS' if res.passed else 'FAIL'} {res.name}: {res.detail}")
        if not res.passed:
            worst = EXIT_VERIFY
    return worst


def cmd_metrics(args) -> int:
    if args.design:
        netlist = build_design(args.design, args.digits)
        label = f"{args.design} digits={args.digits}"
    else:
        netlist = deserialize(args.netlist.read_text(encoding="utf-8"))
        label = str(args.netlist)
    rows = [("total", structural_metrics(netlist))]
    if args.stages:
        rows += list(metric_decomposition(netlist).items())
    if args.format == "csv":
        print("scope,gc,ci,go,qc,delay")
        for scope, rep in rows:
            print(f"{scope},{rep.gc},{rep.ci},{rep.go},{rep.qc},{rep.delay}")
    else:
        print(f"## {label}")
        print("| scope | gc | ci | go | qc | delay |")
        print("|---|---|---|---|---|---|")
        for scope, rep in rows:
            print(
                f"| {scope} | {rep.gc} | {rep.ci} | {rep.go} | {rep.qc} "
                f"| {rep.delay} |"
            )
    return EXIT_OK


def cmd_compare(args) -> int:
    table = costs.cost_table(args.metric, tuple(args.digits))
    if args.format == "csv":
        print(costs.render_csv(table), end="")
    else:
        print(f"## {args.metric} comparison")
        print(costs.render_markdown(table))
        for proposed, rep in table.improvements.items():
            published = costs.PUBLISHED_TOTALS.get((proposed, args.metric))
            note = f" (published {published})" if published is not None else ""
            print(
                f"Total average improvement {proposed}: "
                f"{costs.round_half_up(rep.average)}{note}"
            )
    if not args.no_structural:
        print()
        print(costs.structural_discrepancy_report(), end="")
    return EXIT_OK


def cmd_pareto(args) -> int:
    for n in args.digits:
        points = costs.pareto_points(n)
        front = costs.pareto_front(points)
        if args.format == "tsv":
            print(costs.render_points_tsv(points), end="")
        else:
            print(f"## N={n}")
            print("| design | qc | delay | on front |")
            print("|---|---|---|---|")
            front_keys = {(p.name, p.qc, p.delay) for p in front}
            for p in sorted(points, key=lambda p: (p.qc, p.delay)):
                mark = "yes" if (p.name, p.qc, p.delay) in front_keys else ""
                print(
                    f"| {costs.display_name(p.name)} | {p.qc} | {p.delay} "
                    f"| {mark} |"
                )
            print(
                "front: "
                + ", ".join(costs.display_name(p.name) for p in front)
            )
        if args.svg_dir:
            args.svg_dir.mkdir(parents=True, exist_ok=True)
            out = args.svg_dir / f"pareto-N{n}.svg"
            out.write_text(costs.render_svg(points), encoding="utf-8")
            print(f"wrote {out}")
    return EXIT_OK


def cmd_ledger(args) -> int:
    config = CsvConfig(
        group_column=args.group_col,
        amount_column=args.amount_col,
        delimiter=args.delimiter,
        strict=not args.lenient,
    )
    records, diags = ingest_csv(args.csv, config)
    report = sum_ledger(records, design=args.design, width=args.width)
    if args.format == "csv":
        print("group,total_cents")
        for group, total in report.totals.items():
            print(f"{group},{total}")
    else:
        print("| group | total (cents) |")
        print("|---|---|")
        for group, total in report.totals.items():
            print(f"| {group} | {total} |")
    summary = dict(report.summary())
    summary["rows_read"] = diags.rows_read
    summary["rows_skipped"] = len(diags.skipped)
    print(json.dumps(summary, sort_keys=True))
    if report.mismatches:
        print(f"MISMATCHED GROUPS: {report.mismatches}", file=sys.stderr)
        return EXIT_LEDGER
    return EXIT_OK


_HANDLERS = {
    "build": cmd_build,
    "simulate": cmd_simulate,
    "verify": cmd_verify,
    "metrics": cmd_metrics,
    "compare": cmd_compare,
    "pareto": cmd_pareto,
    "ledger": cmd_ledger,
}


def main(argv: list[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (CapacityError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except (InvalidArgumentError, InvalidBCDError, NetlistFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LedgerFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
