"""Command-line front end: parse, eq, label, stats, check.

Exit codes: 0 success, 1 usage or syntax error, 2 ill-formed theory
query, 3 property-suite failures, 4 scale or overflow error.  All output
is line-oriented UTF-8 on stdout; errors go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .core import QSet
from .errors import (
    CardinalTooLarge,
    DepthExceeded,
    EmptyQset,
    IllFormedFormula,
    MalformedPair,
    NotAMember,
    NotPure,
    Overflow,
    QsetSyntaxError,
    ScaleExceeded,
    UniverseMiss,
)
from .labelling import label, verify_weak_labelling
from .notation import parse, print_canonical
from .relations import ext_eq, indist
from .stats import StatKind, enumerate_occupancies, mb_weight, microstate_count
from .suite import GenConfig, run_suite

_KINDS = {kind.value: kind for kind in StatKind}


class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qset", description="Finite qset models on the command line.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="canonicalize an expression and report its quasi-cardinal")
    p.add_argument("expr", nargs="?", help="qset expression, shell-quoted")
    p.add_argument("--file", help="read one expression per line instead")

    p = sub.add_parser("eq", help="report indistinguishability and extensional equality")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("label", help="run the labelling loop over a pure qset")
    p.add_argument("expr")

    p = sub.add_parser("stats", help="microstate counts for n particles over k states")
    p.add_argument("--particles", type=_nonneg, required=True)
    p.add_argument("--states", type=_nonneg, required=True)
    p.add_argument("--kind", choices=sorted(_KINDS), required=True)
    p.add_argument("--enumerate", action="store_true", help="also list occupancy vectors")

    p = sub.add_parser("check", help="run the axiom and property battery")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--cases", type=_nonneg, default=100)
    return parser


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _report_entity(entity) -> None:
    print(print_canonical(entity))
    if isinstance(entity, QSet):
        print(f"qc={entity.qc}")


def _cmd_parse(args) -> int:
    if (args.expr is None) == (args.file is None):
        print("qset parse: give exactly one of an expression or --file", file=sys.stderr)
        return 1
    if args.expr is not None:
        _report_entity(parse(args.expr))
        return 0
    with open(args.file, encoding="utf-8") as handle:
        for line in handle:
            text = line.strip()
            if text:
                _report_entity(parse(text))
    return 0


def _cmd_eq(args) -> int:
    a = parse(args.a)
    b = parse(args.b)
    print(f"indist={_bool(indist(a, b))}")
    try:
        print(f"ext_eq={_bool(ext_eq(a, b))}")
    except IllFormedFormula:
        print("ext_eq=ill-formed")
    return 0


def _cmd_label(args) -> int:
    entity = parse(args.expr)
    if not isinstance(entity, QSet):
        raise NotPure(f"label needs a qset, got {print_canonical(entity)}")
    warehouse = label(entity)
    if not verify_weak_labelling(warehouse):
        raise RuntimeError("labelling postcondition failed")  # unreachable on a correct build
    for first, second in sorted(warehouse.pairs(), key=lambda pair: pair[1].value):
        print(f"{second.value}: {print_canonical(first)}")
    print(f"qc(w)={warehouse.n}")
    return 0


def _cmd_stats(args) -> int:
    kind = _KINDS[args.kind]
    n, k = args.particles, args.states
    print(f"count={microstate_count(n, k, kind)}")
    if args.enumerate:
        for vector in enumerate_occupancies(n, k, exclusion=kind is StatKind.FERMI_DIRAC):
            body = ",".join(str(c) for c in vector.counts)
            print(f"({body}) weight={mb_weight(vector)}")
    return 0


def _cmd_check(args) -> int:
    report = run_suite(GenConfig(seed=args.seed), args.cases)
    print(report.format())
    return 0 if report.total_failures == 0 else 3


_COMMANDS = {
    "parse": _cmd_parse,
    "eq": _cmd_eq,
    "label": _cmd_label,
    "stats": _cmd_stats,
    "check": _cmd_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (QsetSyntaxError, DepthExceeded) as exc:
        print(f"qset: error: {exc}", file=sys.stderr)
        return 1
    except (IllFormedFormula, NotPure, MalformedPair, UniverseMiss, NotAMember, EmptyQset) as exc:
        print(f"qset: error: {exc}", file=sys.stderr)
        return 2
    except (ScaleExceeded, Overflow, CardinalTooLarge) as exc:
        print(f"qset: error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"qset: error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())
