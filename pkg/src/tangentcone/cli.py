"""Command-line front end.

    tangentcone --a1 38 --a2 20 --a3 8 --a4 3 --a21 12 --mode verify
    tangentcone --batch params.jsonl --format json

Exit codes: 0 success, 1 invalid input, 2 parameters outside the closed-form
hypotheses, 3 internal consistency or cap failure.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .report import (EXIT_INVALID, EXIT_OK, MODES, Options, analyse, dumps, exit_code,
                     run_batch, verification_passed)
from .semigroup import PseudoSymmetricParams

log = logging.getLogger("tangentcone")


def render_text(obj, indent: int = 0) -> str:
    """Outline rendering of a report; carries exactly the JSON leaves."""
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)) and value:
                lines.append(f"{pad}{key}:")
                lines.append(render_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(value)}")
    elif isinstance(obj, list):
        if all(not isinstance(v, (dict, list)) for v in obj):
            lines.append(pad + ", ".join(_scalar(v) for v in obj))
        else:
            for value in obj:
                if isinstance(value, (dict, list)):
                    lines.append(f"{pad}-")
                    lines.append(render_text(value, indent + 1))
                else:
                    lines.append(f"{pad}- {_scalar(value)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines)


def _scalar(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)):
        return "{}" if isinstance(v, dict) else "[]"
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="tangentcone",
        description="Standard bases and Hilbert series of tangent cones of "
                    "4-generated pseudo-symmetric monomial curves.")
    for name in ("a1", "a2", "a3", "a4", "a21"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--mode", choices=MODES, default="report")
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.add_argument("--batch", metavar="PATH", help="JSON Lines file of parameter records")
    p.add_argument("--max-degree", type=int, default=None,
                   help="last degree of the Hilbert function table (default: deg Q + 4)")
    p.add_argument("--trace", action="store_true", help="include reduction traces")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for --batch")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _emit(obj, fmt, out, compact=False):
    if fmt == "json":
        out.write(dumps(obj, compact=compact) + "\n")
    else:
        out.write(render_text(obj) + "\n")
        if compact:
            out.write("\n")


def _single(args, options, out, err) -> int:
    missing = [n for n in ("a1", "a2", "a3", "a4", "a21") if getattr(args, n) is None]
    if missing:
        err.write(f"error: missing parameters: {', '.join('--' + m for m in missing)}\n")
        return EXIT_INVALID
    params = PseudoSymmetricParams(args.a1, args.a2, args.a3, args.a4, args.a21)
    try:
        report = analyse(params, options)
    except (ValueError, TypeError, RuntimeError) as exc:
        err.write(f"error: {exc}\n")
        return exit_code(exc, params)
    if options.mode == "verify":
        summary = {
            "schema_version": report["schema_version"],
            "params": report["params"],
            "passed": verification_passed(report),
            "checks": [{"name": c["name"], "status": c["status"]} for c in report["cross_checks"]],
        }
        _emit(summary, args.format, out)
        return EXIT_OK if summary["passed"] else 3
    _emit(report, args.format, out)
    return EXIT_OK


def _batch(args, options, out, err) -> int:
    try:
        with open(args.batch, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        err.write(f"error: cannot read {args.batch}: {exc}\n")
        return EXIT_INVALID
    for item in run_batch(lines, options, jobs=args.jobs):
        if isinstance(item, tuple):
            report, error = item
            if error is not None:
                err.write(f"warning: line {error['line']}: {error['error']}\n")
                _emit({"error": error}, args.format, out, compact=True)
            else:
                _emit(report, args.format, out, compact=True)
        else:
            _emit(item.as_dict(), args.format, out, compact=True)
            if item.errors:
                err.write(f"warning: {item.errors} record(s) failed\n")
    return EXIT_OK


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    options = Options(mode=args.mode, max_degree=args.max_degree, trace=args.trace)
    if args.batch:
        return _batch(args, options, out, err)
    return _single(args, options, out, err)


if __name__ == "__main__":
    sys.exit(main())
