"""Command-line interface: resolve, invariants, check, fuzz."""

from __future__ import annotations

import argparse
import sys

from .fields import DEFAULT_PRIME, FieldSpec
from .fuzz import FuzzConfig, fuzz
from .harness import (ProblemError, emit_report, invariant_report,
                      load_problem)
from .resolution import resolve


def _parse_vars(text: str):
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad variable range {text!r}")
    if not (2 <= lo <= hi <= 4):
        raise argparse.ArgumentTypeError("variable range must lie in 2..4")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="syzkit",
        description="minimal free resolutions and syzygy invariants over "
                    "graded quotient rings")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("resolve", help="compute a minimal free resolution")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("invariants",
                       help="full syzygy invariant report for a problem file")
    p.add_argument("file")
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("check", help="run the curated example suite")
    p.add_argument("--suite", choices=("paper",), required=True)
    p.add_argument("--steps", type=int, default=None)
    p.add_argument("--field", default=None,
                   help="'rational' or 'prime P' to override the field")

    p = sub.add_parser("fuzz", help="randomized property checking")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--cases", type=int, required=True)
    p.add_argument("--vars", type=_parse_vars, default=(2, 3),
                   help="variable count range, e.g. 2..3")
    p.add_argument("--maxdeg", type=int, default=3)
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    return parser


def _load(path):
    try:
        return load_problem(path)
    except (ProblemError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        raise SystemExit(2)


def _cmd_resolve(args) -> int:
    spec = _load(args.file)
    if args.steps is not None:
        spec.steps = args.steps
    report = invariant_report(spec)
    if args.format == "text":
        res = resolve(spec.module, spec.steps)
        print("β: " + " ".join(str(b) for b in res.betti))
        print(f"terminated: {'yes' if res.terminated else 'no'}")
        for i, f in enumerate(res.maps[:spec.steps], start=1):
            if f.source.rank == 0:
                break
            rows = f.rows
            print(f"f_{i}:")
            for row in rows:
                print("  [ " + ", ".join(str(p) for p in row) + " ]")
    else:
        sys.stdout.write(emit_report(report, "structured"))
    return 0


def _cmd_invariants(args) -> int:
    spec = _load(args.file)
    if args.steps is not None:
        spec.steps = args.steps
    report = invariant_report(spec)
    sys.stdout.write(emit_report(report, args.format))
    return 0


def _cmd_check(args) -> int:
    from .suite import run_paper_suite
    field = None
    if args.field is not None:
        text = args.field.strip()
        if text == "rational":
            field = "rational"
        elif text.startswith("prime"):
            field = text
        else:
            print(f"error: bad field {text!r}", file=sys.stderr)
            return 2
    outcomes = run_paper_suite(steps=args.steps, field=field)
    failed = 0
    for o in outcomes:
        print(f"[{o.status:>7}] {o.check_id}" +
              (f" — {o.details}" if o.details else ""))
        if o.status == "fail":
            failed += 1
            if o.reproducer:
                for ln in o.reproducer.rstrip().splitlines():
                    print("    " + ln)
    print(f"{len(outcomes)} checks, {failed} failed")
    return 1 if failed else 0


def _cmd_fuzz(args) -> int:
    lo, hi = args.vars
    config = FuzzConfig(seed=args.seed, cases=args.cases, min_vars=lo,
                        max_vars=hi, max_degree=args.maxdeg, steps=args.steps,
                        field=FieldSpec(DEFAULT_PRIME))
    report = fuzz(config)
    sys.stdout.write(emit_report(report, args.format))
    return 0 if report.ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits with 2 on usage errors already
        return int(e.code or 0)
    handlers = {
        "resolve": _cmd_resolve,
        "invariants": _cmd_invariants,
        "check": _cmd_check,
        "fuzz": _cmd_fuzz,
    }
    try:
        return handlers[args.command](args)
    except SystemExit as e:
        return int(e.code or 0)
    except ProblemError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
