"""Command-line entry point: ``kfseq <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
Errors go to stderr as a one-line JSON object ``{"error": {"code", "message"}}``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from .config import DomainError, ResourceLimitError
from .discrepancy import low_discrepancy_profile
from .golden import GoldenNumber, gf_to_decimal, parse_exact
from .iet import branch_table, orbit
from .partition import kakutani_sequence, length_classes
from .points import xi_blocks, xi_stream
from .qmc import CATALOG, birkhoff_average, qmc_integrate
from .stacking import columns
from .verify import run_all

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def _emit(records: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(records, indent=2) + "\n")
        return
    if not records:
        return
    w = csv.DictWriter(out, fieldnames=list(records[0]), lineterminator="\n")
    w.writeheader()
    w.writerows(records)


def _value_records(values, digits: int, start: int) -> list[dict]:
    return [
        {"index": i, "exact": x.to_text(), "decimal": gf_to_decimal(x, digits)}
        for i, x in enumerate(values, start=start)
    ]


def cmd_points(args, out) -> int:
    if args.mode == "orbit":
        values = list(xi_stream(args.count))
    else:
        values = xi_blocks(args.count)
    _emit(_value_records(values, args.precision, 1), args.format, out)
    return EXIT_OK


def cmd_orbit(args, out) -> int:
    try:
        x0 = parse_exact(args.start)
    except ValueError as e:
        raise UsageError(str(e)) from None
    _emit(_value_records(orbit(x0, args.count), args.precision, 0), args.format, out)
    return EXIT_OK


def cmd_partition(args, out) -> int:
    p = kakutani_sequence(args.level)
    rows = [
        {"index": i, "left_exact": u.to_text(), "left_decimal": gf_to_decimal(u, args.precision), "length_class": c}
        for i, (u, c) in enumerate(zip(p.breakpoints, length_classes(p)), start=1)
    ]
    _emit(rows, args.format, out)
    return EXIT_OK


def _interval(u: GoldenNumber, v: GoldenNumber, digits: int) -> dict:
    return {
        "left_exact": u.to_text(),
        "left_decimal": gf_to_decimal(u, digits),
        "right_exact": v.to_text(),
        "right_decimal": gf_to_decimal(v, digits),
    }


def cmd_stack(args, out) -> int:
    c = columns(args.level)
    doc = {"level": c.n}
    for name, col in (("L", c.L), ("S", c.S)):
        doc[name] = {
            "width_exact": col.width.to_text(),
            "width_decimal": gf_to_decimal(col.width, args.precision),
            "height": col.height,
            "intervals": [_interval(u, v, args.precision) for u, v in col.intervals],
        }
    out.write(json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_branches(args, out) -> int:
    d = args.precision
    rows = [
        {
            "k": b.k,
            "left_exact": b.left.to_text(),
            "right_exact": b.right.to_text(),
            "c_exact": b.c.to_text(),
            "left_decimal": gf_to_decimal(b.left, d),
            "right_decimal": gf_to_decimal(b.right, d),
            "c_decimal": gf_to_decimal(b.c, d),
        }
        for b in branch_table(args.max_k)
    ]
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_discrepancy(args, out) -> int:
    d = args.precision
    rows = []
    for row in low_discrepancy_profile(args.n_max, args.source, args.kernel, args.max_exact_n):
        rep = row.report
        if args.source == "partition":
            normalized = gf_to_decimal(rep.normalized, d)
        else:
            normalized = f"{row.score:.{d}f}"
        rows.append(
            {
                "N": rep.N,
                "D_exact": rep.value.to_text(),
                "D_decimal": rep.decimal(d),
                "normalized": normalized,
                "witness_a": rep.witness[0].to_text(),
                "witness_b": rep.witness[1].to_text(),
            }
        )
    _emit(rows, args.format, out)
    return EXIT_OK


def cmd_integrate(args, out) -> int:
    try:
        if args.source.startswith("orbit:"):
            res = birkhoff_average(args.source.split(":", 1)[1], args.fn, args.count)
        else:
            res = qmc_integrate(args.fn, args.count, args.source)
    except ValueError as e:
        if isinstance(e, DomainError):
            raise
        raise UsageError(str(e)) from None
    doc = {
        "fn": res.fn,
        "estimate": res.estimate,
        "exact": res.exact,
        "abs_error": res.abs_error,
        "N": res.N,
        "source": args.source,
    }
    if not CATALOG[res.fn].continuous:
        doc["note"] = "discontinuous integrand: diagnostic only"
    out.write(json.dumps(doc) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks = run_all(args.level, args.max_k)
    for c in checks:
        out.write(f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}\n")
    return EXIT_OK if all(c.ok for c in checks) else EXIT_VERIFY


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--precision", type=_positive, default=15, help="decimal digits (default 15)")

    p = _Parser(
        prog="kfseq",
        description="Kakutani-Fibonacci partitions, points and interval exchange. "
        "KFSEQ_MAX_LEVEL overrides the refinement level cap (default 25).",
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("points", parents=[common], help="first N points xi_1..xi_N")
    s.add_argument("--count", type=_positive, required=True)
    s.add_argument("--mode", choices=["orbit", "blocks"], default="orbit")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_points)

    s = sub.add_parser("orbit", parents=[common], help="orbit of an exact start under T")
    s.add_argument("--start", default="0", help="exact value a+b*alpha (default 0)")
    s.add_argument("--count", type=_non_negative, required=True)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_orbit)

    s = sub.add_parser("partition", parents=[common], help="left endpoints of alpha^n omega")
    s.add_argument("--level", type=_non_negative, required=True)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_partition)

    s = sub.add_parser("stack", parents=[common], help="cutting-stacking columns L_n, S_n")
    s.add_argument("--level", type=_positive, required=True)
    s.add_argument("--format", choices=["json"], default="json")
    s.set_defaults(func=cmd_stack)

    s = sub.add_parser("branches", parents=[common], help="branch table of T")
    s.add_argument("--max-k", type=_positive, default=40)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_branches)

    s = sub.add_parser("discrepancy", parents=[common], help="discrepancy along the Fibonacci ladder")
    s.add_argument("--source", choices=["points", "partition"], default="points")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--kernel", choices=["extreme", "star"], default="extreme")
    s.add_argument("--max-exact-n", type=_positive, default=20000)
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_discrepancy)

    s = sub.add_parser("integrate", parents=[common], help="QMC / Birkhoff average of a catalog integrand")
    s.add_argument("--fn", choices=sorted(CATALOG), required=True)
    s.add_argument("--count", type=_positive, required=True)
    s.add_argument("--source", default="xi", help="xi | orbit:<x0> | orbit:random:<seed> | random:<seed>")
    s.set_defaults(func=cmd_integrate)

    s = sub.add_parser("verify", parents=[common], help="run all exact cross-checks up to a level")
    s.add_argument("--level", type=_positive, required=True)
    s.add_argument("--max-k", type=_positive, default=40)
    s.set_defaults(func=cmd_verify)
    return p


def _fail(code: str, message: str, status: int, err) -> int:
    err.write(json.dumps({"error": {"code": code, "message": message}}) + "\n")
    return status


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "n_max", 2) < 2:
            raise UsageError("--n-max must be >= 2")
        buf = io.StringIO()
        status = args.func(args, buf)
    except UsageError as e:
        return _fail("usage", str(e), EXIT_USAGE, err)
    except DomainError as e:
        return _fail(e.code, str(e), EXIT_USAGE, err)
    except ResourceLimitError as e:
        return _fail(e.code, str(e), EXIT_RESOURCE, err)
    except (ValueError, KeyError) as e:
        return _fail("usage", str(e), EXIT_USAGE, err)
    out.write(buf.getvalue())
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
