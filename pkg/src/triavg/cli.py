"""Command-line front end: generate sequences, verify identities, scan the
Diophantine equation, and print verified witnesses.

Exit codes: 0 on success (all checks passing), 1 on a verification failure,
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable

from .convergents import cf_sqrt3, check_bisection, check_difference_identities
from .identities import (
    IdentityReport,
    check_congruences,
    check_discriminant,
    check_linkages,
    check_lucas_identities,
    check_v_square,
    run_all,
)
from .recurrences import RecurrenceSpec, resolve_spec, sequence_prefix
from .triangular import enumerate_solutions, prefix_average, witness

PREFIX_WARN_THRESHOLD = 10**6

SUITES: dict[str, Callable[[int], IdentityReport]] = {
    "lucas": check_lucas_identities,
    "discriminant": check_discriminant,
    "congruences": check_congruences,
    "linkages": check_linkages,
    "v-square": check_v_square,
    "bisection": check_bisection,
    "differences": check_difference_identities,
}

MAX_FAILURE_DETAILS = 10


class UsageError(Exception):
    """Bad command-line input; reported on stderr with exit status 2."""


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="triavg",
        description=(
            "Exact-arithmetic tool for the sequences around averages of "
            "triangular numbers: the average of the first b_n triangular "
            "numbers is the a_n-th triangular number."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser(
        "gen",
        help="print the first terms of a sequence",
        description=(
            "Sequences: a, b, u, v, L, F (recurrence family w_n = 4*w_{n-1} "
            "- w_{n-2} + k), z (numerators of continued-fraction convergents "
            "to sqrt(3)), or custom with --k/--w0/--w1. All indices start "
            "at 0."
        ),
    )
    gen.add_argument("seq", help="a | b | u | v | L | F | z | custom")
    gen.add_argument("--count", type=_positive_int, required=True, help="number of terms")
    gen.add_argument(
        "--format",
        choices=("plain", "bfile", "csv", "json"),
        default="plain",
        help="output format (default: plain)",
    )
    gen.add_argument("--k", type=int, help="forcing constant (custom only)")
    gen.add_argument("--w0", type=int, help="first term (custom only)")
    gen.add_argument("--w1", type=int, help="second term (custom only)")
    gen.add_argument("--out", help="write to this file instead of stdout")
    gen.set_defaults(func=cmd_gen)

    verify = sub.add_parser(
        "verify",
        help="check the proved identities over an index range",
        description="Suites: " + ", ".join(sorted(SUITES)) + ", or all.",
    )
    verify.add_argument("--suite", default="all", help="suite name or 'all' (default: all)")
    verify.add_argument("--max-n", type=_positive_int, default=64, help="top index (default: 64)")
    verify.add_argument("--out", help="write to this file instead of stdout")
    verify.set_defaults(func=cmd_verify)

    solve = sub.add_parser(
        "solve",
        help="brute-force the equation s^2 + 3s + 2 = 3r^2 + 3r",
        description=(
            "Scans every s up to --max-s, inverting the average equation via "
            "r = (sqrt(3*(11 + 12s + 4s^2)) - 3) / 6, and flags each hit "
            "against the recurrence-predicted pairs (b_n, a_n)."
        ),
    )
    solve.add_argument("--max-s", type=_positive_int, required=True, help="scan bound for s")
    solve.add_argument("--out", help="write to this file instead of stdout")
    solve.set_defaults(func=cmd_solve)

    wit = sub.add_parser(
        "witness",
        help="verify one instance of the main statement",
        description=(
            "Prints the fully verified record for index n: the average of "
            "the first b_n triangular numbers equals the a_n-th triangular "
            "number."
        ),
    )
    wit.add_argument("n", type=_nonnegative_int, help="witness index, n >= 1")
    wit.add_argument("--out", help="write to this file instead of stdout")
    wit.set_defaults(func=cmd_witness)

    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _gen_values(args: argparse.Namespace) -> tuple[str, list[int]]:
    custom_flags = [args.k, args.w0, args.w1]
    if args.seq == "custom":
        if any(flag is None for flag in custom_flags):
            raise UsageError("custom sequences need all of --k, --w0, --w1")
        spec = RecurrenceSpec(k=args.k, w0=args.w0, w1=args.w1)
        name = f"custom(k={args.k},w0={args.w0},w1={args.w1})"
        return name, sequence_prefix(spec, args.count)
    if any(flag is not None for flag in custom_flags):
        raise UsageError("--k/--w0/--w1 are only valid with seq 'custom'")
    if args.seq == "z":
        return "z", [c.p for c in cf_sqrt3(args.count)]
    try:
        spec = resolve_spec(args.seq)
    except KeyError:
        raise UsageError(
            f"unknown sequence {args.seq!r}; expected a, b, u, v, L, F, z or custom"
        )
    canonical = next(letter for letter in "abuvLF" if resolve_spec(letter) == spec)
    return canonical, sequence_prefix(spec, args.count)


def _format_values(name: str, values: list[int], fmt: str) -> str:
    if fmt == "plain":
        return " ".join(str(v) for v in values) + "\n"
    if fmt == "bfile":
        lines = [f"# {name} offset 0"]
        lines.extend(f"{i} {v}" for i, v in enumerate(values))
        return "\n".join(lines) + "\n"
    if fmt == "csv":
        return "".join(f"{i},{v}\n" for i, v in enumerate(values))
    if fmt == "json":
        return json.dumps([{"n": i, "value": str(v)} for i, v in enumerate(values)]) + "\n"
    raise UsageError(f"unknown format {fmt!r}")


def parse_bfile(text: str) -> list[tuple[int, int]]:
    """Read (index, value) pairs back out of b-file text, skipping comments."""
    pairs = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        index_text, value_text = line.split(" ")
        pairs.append((int(index_text), int(value_text)))
    return pairs


def cmd_gen(args: argparse.Namespace) -> int:
    name, values = _gen_values(args)
    if args.count > PREFIX_WARN_THRESHOLD:
        print(
            f"warning: generating {args.count} terms; values grow geometrically "
            "and the output will be large",
            file=sys.stderr,
        )
    _emit(_format_values(name, values, args.format), args.out)
    return 0


def _report_lines(report: IdentityReport) -> list[str]:
    lo, hi = report.checked_range
    if report.ok:
        return [f"{report.name} [{lo}..{hi}] PASS"]
    lines = [f"{report.name} [{lo}..{hi}] FAIL ({len(report.failures)} failures)"]
    for n, lhs, rhs in report.failures[:MAX_FAILURE_DETAILS]:
        lines.append(f"  n={n} lhs={lhs} rhs={rhs}")
    if len(report.failures) > MAX_FAILURE_DETAILS:
        lines.append(f"  ... {len(report.failures) - MAX_FAILURE_DETAILS} more")
    return lines


def cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        reports = run_all(args.max_n)
    elif args.suite in SUITES:
        reports = [SUITES[args.suite](args.max_n)]
    else:
        raise UsageError(f"unknown suite {args.suite!r}; expected all or one of: " + ", ".join(sorted(SUITES)))
    lines: list[str] = []
    for report in reports:
        lines.extend(_report_lines(report))
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(report.ok for report in reports) else 1


def cmd_solve(args: argparse.Namespace) -> int:
    pairs = enumerate_solutions(args.max_s)
    predicted: dict[tuple[int, int], int] = {}
    n = 1
    while True:
        record = witness(n)
        if record.s > args.max_s:
            break
        predicted[(record.s, record.r)] = n
        n += 1
    lines = ["# s r average match"]
    clean = True
    for s, r in pairs:
        avg = prefix_average(s)
        if avg.denominator != 1:
            lines.append(f"{s} {r} {avg} NON-INTEGRAL")
            clean = False
            continue
        index = predicted.pop((s, r), None)
        if index is None:
            lines.append(f"{s} {r} {avg} UNEXPECTED")
            clean = False
        else:
            lines.append(f"{s} {r} {avg} (b_{index},a_{index})")
    for (s, r), index in sorted(predicted.items()):
        lines.append(f"{s} {r} - MISSED (b_{index},a_{index}) not found by scan")
        clean = False
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if clean else 1


def cmd_witness(args: argparse.Namespace) -> int:
    record = witness(args.n)
    status = "VERIFIED" if record.verify() else "FAILED"
    _emit(
        f"n={record.n} b={record.s} sum={record.total} avg={record.avg} "
        f"a={record.r} {status}\n",
        args.out,
    )
    return 0 if status == "VERIFIED" else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print(f"verification error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
