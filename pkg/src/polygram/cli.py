"""``polygram`` command line: tables, symbolic expansions, verification."""

from __future__ import annotations

import argparse
import sys

from polygram import checks
from polygram.dirichlet import MAX_EXPANSION_WIDTH, expand_V
from polygram.hyperd import MAX_DIMENSION, table_hyper
from polygram.oracle import MAX_AREA, MAX_VOLUME
from polygram.polycube import table_c, table_s
from polygram.polyomino import table_b, table_g

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(args, *names):
    for name in names:
        value = getattr(args, name)
        if value is None or value < 1:
            raise UsageError(f"--{name} must be a positive integer, got {value}")


def cmd_table(args, out=None) -> int:
    out = out or sys.stdout
    kind = args.kind
    if kind in ("b", "c", "g"):
        _positive(args, "k", "n")
        table = {"b": table_b, "c": table_c, "g": table_g}[kind](args.k, args.n)
    elif kind == "s":
        _positive(args, "k", "n", "m")
        table = table_s(args.k, args.n, args.m)
    else:
        _positive(args, "k", "n", "d")
        if not 2 <= args.d <= args.max_dimension:
            raise UsageError(f"--d must lie in 2..{args.max_dimension}")
        table = table_hyper(args.d, args.k, args.n, args.max_dimension)
    out.write(table.to_csv() if args.format == "csv" else table.to_json())
    return EXIT_OK


def cmd_expand(args, out=None) -> int:
    out = out or sys.stdout
    _positive(args, "k")
    if args.k > args.max_k:
        raise UsageError(f"refusing to expand V_{args.k}: width cap is {args.max_k}")
    expansion = expand_V(args.k, max_width=args.max_k)
    if args.count_only:
        out.write(f"{len(expansion)}\n")
        return EXIT_OK
    if args.power is not None:
        if args.power < 2:
            raise UsageError("--power must be >= 2")
        xs = ",".join(f"x{i}" for i in range(1, args.k + 1))
        out.write(f"# P_{args.power},{args.k}({xs}) = (V_{args.k}({xs}))^{args.power - 1}\n")
    out.write(f"{expansion}\n")
    return EXIT_OK


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    if not 1 <= args.max_area <= MAX_AREA:
        raise UsageError(f"--max-area must lie in 1..{MAX_AREA}")
    if not 1 <= args.max_volume <= MAX_VOLUME:
        raise UsageError(f"--max-volume must lie in 1..{MAX_VOLUME}")
    cfg = checks.VerifyConfig(
        max_area=args.max_area,
        max_volume=args.max_volume,
        oeis_dir=args.oeis_dir,
        max_dimension=min(args.max_dimension, 5),
    )
    results = checks.run_checks(cfg)
    out.write(checks.format_report(results))
    return EXIT_FAIL if any(r.status == checks.FAIL for r in results) else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polygram",
        description="Exact counts of parallelogram polyominoes, polycubes and polyhypercubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a count table")
    p.add_argument("kind", choices=["b", "c", "g", "s", "hyper"],
                   help="b: width/area, c: width/volume, g: width/height, "
                        "s: width/height/depth, hyper: d-dimensional width/heights")
    p.add_argument("--k", type=int, default=10, help="largest width")
    p.add_argument("--n", type=int, default=10, help="largest area, volume or height")
    p.add_argument("--m", type=int, default=None, help="largest depth (table s)")
    p.add_argument("--d", type=int, default=None, help="dimension (table hyper)")
    p.add_argument("--max-dimension", type=int, default=MAX_DIMENSION)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("expand", help="print the zeta expansion of V_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--count-only", action="store_true", help="print only the number of terms")
    p.add_argument("--power", type=int, default=None, metavar="D",
                   help="annotate as the dimension-D polyhypercube series (V_k)^(D-1)")
    p.add_argument("--max-k", type=int, default=MAX_EXPANSION_WIDTH)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    p.add_argument("--max-area", type=int, default=10)
    p.add_argument("--max-volume", type=int, default=8)
    p.add_argument("--max-dimension", type=int, default=5)
    p.add_argument("--oeis-dir", default=None, help="directory holding bNNNNNN.txt files")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "table" and args.kind == "s" and args.m is None:
        args.m = args.n
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"polygram: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
