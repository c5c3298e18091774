"""Command-line entry point.

    suzree <group> --q <q> factor   [--element FILE|-]
    suzree <group> --q <q> verify   SUITE... [--exhaustive | --sample N] [--seed S]
    suzree <group> --q <q> enumerate [--count-only]
    suzree <group> --q <q> sample   [--sample N] [--seed S]

Exit codes: 0 success, 1 verification failure or element not in the group,
2 usage or parse error. ``SUZREE_WORKERS`` sets the worker-process count.
"""

from __future__ import annotations

import argparse
import sys

from .errors import NotInGroup, ParseError, SuzReeError
from .field import FieldSpec
from .matrix import parse_matrix
from .verify import (GROUPS, SUITES, UsageError, check_exhaustive_size, group_for,
                     map_blocks, run_suite, sample_seed, worker_count)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="suzree",
        description="Suzuki and small Ree groups: Bruhat decomposition and U U- U U- factorization.")
    parser.add_argument("group", choices=sorted(GROUPS))
    parser.add_argument("--q", type=int, required=True, help="field order, 2^(2m+1) or 3^(2m+1)")
    parser.add_argument("--field", metavar="SPEC",
                        help='explicit field, e.g. "p=2 n=3 mod=1,1,0,1" (default: built-in modulus)')
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor one element as U U- U U-")
    p.add_argument("--element", default="-", metavar="FILE|-",
                   help="matrix in the text format; '-' reads standard input")

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suites", nargs="+", choices=SUITES, metavar="SUITE",
                   help=f"one or more of {', '.join(SUITES)}")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exhaustive", action="store_true", help="every case (default)")
    mode.add_argument("--sample", type=int, metavar="N", help="N random cases")
    p.add_argument("--seed", default="0")

    p = sub.add_parser("enumerate", help="list every group element (small q only)")
    p.add_argument("--count-only", action="store_true", help="print the distinct-element count")

    p = sub.add_parser("sample", help="factor N uniform random elements")
    p.add_argument("-n", "--sample", type=int, default=1, metavar="N")
    p.add_argument("--seed", default="0")
    return parser


def cmd_factor(G, args, out) -> int:
    try:
        if args.element == "-":
            text = sys.stdin.read()
        else:
            with open(args.element) as fh:
                text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        g = parse_matrix(text, G.field, G.dim)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        fac = G.factor(g)
    except NotInGroup:
        print("not in group", file=sys.stderr)
        return EXIT_FAIL
    print(fac.to_text(G.header), file=out)
    ok = G.check_factorization(g, fac)
    print("PRODUCT OK" if ok else "PRODUCT FAIL", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(G, args, out) -> int:
    if args.sample is not None:
        if args.sample < 0:
            raise UsageError("--sample must be non-negative")
        mode, n = "sample", args.sample
    else:
        mode, n = "exhaustive", 0
    # validate every suite before running any of them
    for suite in args.suites:
        if suite == "closure" and mode == "sample":
            raise UsageError("closure needs --exhaustive")
        if suite in ("bruhat", "form", "closure") and mode == "exhaustive":
            check_exhaustive_size(G)
    failed = False
    for suite in args.suites:
        for rep in run_suite(G, suite, mode, n, args.seed):
            print(rep.line(), file=out)
            if not rep.ok:
                failed = True
                print(f"FIRST FAILURE {rep.suite}\n{rep.witness}", file=out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_enumerate(G, args, out) -> int:
    check_exhaustive_size(G)
    if args.count_only:
        print(len(set(G.enumerate_group())), file=out)
    else:
        for g in G.enumerate_group():
            print(g.to_text(), file=out)
            print(file=out)
    return EXIT_OK


def _sample_block(G, seed, start, stop):
    chunks = []
    for index in range(start, stop):
        g = G.random_element(sample_seed(seed, index))
        fac = G.factor(g)
        ok = G.check_factorization(g, fac)
        chunks.append((fac.to_text(G.header) + ("\nPRODUCT OK" if ok else "\nPRODUCT FAIL"), ok))
    return chunks


def cmd_sample(G, args, out) -> int:
    if args.sample < 0:
        raise UsageError("--sample must be non-negative")
    failed = False
    for block in map_blocks(_sample_block, G, args.sample, worker_count(), args.seed):
        for text, ok in block:
            print(text, file=out)
            failed = failed or not ok
    return EXIT_FAIL if failed else EXIT_OK


COMMANDS = {"factor": cmd_factor, "verify": cmd_verify, "enumerate": cmd_enumerate,
            "sample": cmd_sample}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on bad flags, 0 on --help
        return int(exc.code or 0)
    try:
        field = FieldSpec.parse(args.field) if args.field else None
        G = group_for(args.group, args.q, field)
        return COMMANDS[args.command](G, args, out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, SuzReeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
