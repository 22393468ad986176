"""Command line entry point: ``quadsub --input problem.txt``.

Exit codes: 0 certificate verified (or unit ideal flagged), 1 parse or
usage error, 2 genericity exhaustion, 3 invariant violation or failed
verification.
"""
from __future__ import annotations

import argparse
import sys

from .bounds import DEFAULT_REPORT_CEILING, asymptotic_report, format_report
from .errors import GenericityError, InvariantViolation
from .io import ParseError, parse_document, parse_problem
from .pipeline import run_pipeline, verify_document

EXIT_OK, EXIT_USAGE, EXIT_GENERICITY, EXIT_INVARIANT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quadsub", description="Place forms of degree <= 2 in a small "
                "subalgebra generated by a regular sequence, and verify the result.")
    p.add_argument("--input", help="problem file ('-' for stdin)")
    p.add_argument("--seed", type=int, help="random seed (overrides the file)")
    p.add_argument("--retries", type=int, help="random retries per generic choice")
    p.add_argument("--verify-level", type=int, choices=(1, 2, 3),
                   help="1 certificate, 2 + bounds (default), 3 + projective dimension")
    p.add_argument("--emit", choices=("text", "json"), default="text")
    p.add_argument("--bounds-table", type=int, metavar="S_MAX",
                   help="print C(s), C0(s) and their ratios to 2s^(2s), then exit")
    p.add_argument("--resolution-budget", type=int, metavar="STEPS",
                   help="S-pair budget for the free resolution at level 3")
    p.add_argument("--timing", action="store_true", help="record wall time in the document")
    p.add_argument("--verify", metavar="DOC", help="re-verify a certificate document and exit")
    return p


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    err = sys.stderr
    if args.bounds_table is not None:
        s = args.bounds_table
        if not 1 <= s <= DEFAULT_REPORT_CEILING:
            print(f"quadsub: --bounds-table must be between 1 and {DEFAULT_REPORT_CEILING}",
                  file=err)
            return EXIT_USAGE
        print(format_report(asymptotic_report(s)))
        return EXIT_OK
    if args.verify:
        try:
            doc = parse_document(_read(args.verify))
        except (OSError, ParseError, ValueError) as exc:
            print(f"quadsub: {exc}", file=err)
            return EXIT_USAGE
        problems = verify_document(doc)
        for msg in problems:
            print(f"quadsub: {msg}", file=err)
        print("verified" if not problems else "rejected")
        return EXIT_INVARIANT if problems else EXIT_OK
    if not args.input:
        print("quadsub: one of --input, --bounds-table or --verify is required", file=err)
        return EXIT_USAGE
    for name in ("retries", "resolution_budget", "seed"):
        v = getattr(args, name)
        if v is not None and v < 0:
            print(f"quadsub: --{name.replace('_', '-')} must be nonnegative", file=err)
            return EXIT_USAGE
    try:
        problem = parse_problem(_read(args.input))
    except (OSError, ParseError) as exc:
        print(f"quadsub: {exc}", file=err)
        return EXIT_USAGE
    try:
        doc = run_pipeline(problem, seed=args.seed, retries=args.retries,
                           verify_level=args.verify_level,
                           resolution_budget=args.resolution_budget, timing=args.timing)
    except GenericityError as exc:
        print(f"quadsub: genericity exhausted: {exc}", file=err)
        return EXIT_GENERICITY
    except InvariantViolation as exc:
        print(f"quadsub: invariant violation: {exc}", file=err)
        return EXIT_INVARIANT
    sys.stdout.write(doc.to_json() + "\n" if args.emit == "json" else doc.to_text())
    if doc.verdict == "fail":
        for msg in doc.reasons:
            print(f"quadsub: {msg}", file=err)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
