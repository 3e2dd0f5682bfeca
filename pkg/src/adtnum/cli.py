"""Command-line frontend.

Subcommands: ``check`` validates a definition file and reports shapes,
``encode``/``decode`` run the codec on single terms, ``enum`` lists a
rank-bounded corpus, ``selftest`` runs the law suite, and ``report``
writes per-type metrics (CSV plus growth figures) to a directory.

Exit codes: 0 ok, 1 definition error, 2 term error, 3 not-a-code.
Results go to stdout and are byte-deterministic for fixed inputs and
flags; diagnostics and timings go to stderr.
"""

from __future__ import annotations

import argparse
import sys

from .enumerator import EnumBudget, enumerate_upto_rank
from .engine import decode, encode
from .errors import AdtError, ParseError, TermError, ValidationError
from .pairing import PairingScheme
from .pipeline import CompiledProgram, compile_program
from .selftest import all_ok, run_selftest
from .syntax import base_names, normtype_of, render_typeexpr
from .terms import parse_term, render_term

EXIT_OK = 0
EXIT_DEFINITION = 1
EXIT_TERM = 2
EXIT_NOT_A_CODE = 3

NOT_A_CODE = "NOT-A-CODE"


def _read_source(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _scheme(value: str) -> PairingScheme:
    return PairingScheme(value)


def _compile(path: str, scheme: PairingScheme) -> CompiledProgram:
    return compile_program(_read_source(path), scheme)


def cmd_check(args: argparse.Namespace) -> int:
    try:
        prog = _compile(args.file, PairingScheme.COMPACT)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFINITION
    for name, ct in prog.types.items():
        codec = prog.registry.lookup(name)
        card = codec.cardinality if codec else None
        size = "infinite" if card is None else f"{card} inhabitants"
        print(f"type {name}: {len(ct.constrs)} constructors, {size}")
        for sig in ct.constrs:
            shown = ", ".join("rec" if a is None else a for a in sig.args)
            print(f"  constructor {sig.name}({shown})")
        print(f"  normtype: {render_typeexpr(normtype_of(ct.constrs))}")
        deps = base_names(ct.constrs)
        print(f"  bases: {', '.join(deps) if deps else 'none'}")
    return EXIT_OK


def _resolve_type(prog: CompiledProgram, name: str):
    if name not in prog.types:
        print(f"error: no type named '{name}' in the input file",
              file=sys.stderr)
        return None
    return prog.type_named(name)


def cmd_encode(args: argparse.Namespace) -> int:
    try:
        prog = _compile(args.file, args.pairing)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFINITION
    ct = _resolve_type(prog, args.type)
    if ct is None:
        return EXIT_DEFINITION
    try:
        term = parse_term(args.term, ct.constrs, prog.registry)
        code = encode(term, ct.config)
    except AdtError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TERM
    print(code)
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    try:
        prog = _compile(args.file, args.pairing)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFINITION
    ct = _resolve_type(prog, args.type)
    if ct is None:
        return EXIT_DEFINITION
    term = decode(args.code, ct.config)
    if term is None:
        print(NOT_A_CODE)
        return EXIT_NOT_A_CODE
    print(render_term(term, ct.constrs, prog.registry))
    return EXIT_OK


def cmd_enum(args: argparse.Namespace) -> int:
    try:
        prog = _compile(args.file, PairingScheme.COMPACT)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFINITION
    ct = _resolve_type(prog, args.type)
    if ct is None:
        return EXIT_DEFINITION
    budget = EnumBudget(args.max_rank, args.base_budget)
    for term in enumerate_upto_rank(ct.constrs, prog.registry, budget):
        print(render_term(term, ct.constrs, prog.registry))
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    schemes = (
        (PairingScheme.PAPER, PairingScheme.COMPACT)
        if args.pairing == "both"
        else (PairingScheme(args.pairing),)
    )
    try:
        reports = run_selftest(
            _read_source(args.file),
            max_rank=args.max_rank,
            base_budget=args.base_budget,
            schemes=schemes,
        )
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFINITION
    for report in reports:
        print(f"{report.name}: corpus of {report.corpus_size} terms")
        for result in report.results:
            print(f"  {result.line()}")
        print(f"  {report.name}: {report.seconds:.3f}s", file=sys.stderr)
    ok = all_ok(reports)
    print("all laws hold" if ok else "LAW VIOLATIONS FOUND")
    return EXIT_OK if ok else EXIT_DEFINITION


def cmd_report(args: argparse.Namespace) -> int:
    from . import report as report_mod

    try:
        prog_compact = _compile(args.file, PairingScheme.COMPACT)
        prog_paper = _compile(args.file, PairingScheme.PAPER)
    except (ParseError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEFINITION
    budget = EnumBudget(args.max_rank, args.base_budget)
    paths = report_mod.write_report(prog_compact, prog_paper, budget, args.out)
    for p in paths:
        print(p)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="adtnum",
        description="Injective numberings for first-order inductive datatypes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate definitions and print shapes")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("encode", help="encode one term to its decimal code")
    p.add_argument("file")
    p.add_argument("--type", required=True)
    p.add_argument("--term", required=True)
    p.add_argument("--pairing", type=_scheme, default=PairingScheme.COMPACT,
                   choices=list(PairingScheme), metavar="{paper,compact}")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a decimal code back to a term")
    p.add_argument("file")
    p.add_argument("--type", required=True)
    p.add_argument("--code", type=int, required=True)
    p.add_argument("--pairing", type=_scheme, default=PairingScheme.COMPACT,
                   choices=list(PairingScheme), metavar="{paper,compact}")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("enum", help="list all terms below a rank bound")
    p.add_argument("file")
    p.add_argument("--type", required=True)
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--base-budget", type=int, default=3)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("selftest", help="run the law suite on every type")
    p.add_argument("file")
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--base-budget", type=int, default=3)
    p.add_argument("--pairing", default="both",
                   choices=["both", "paper", "compact"])
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("report", help="write metrics CSV and figures")
    p.add_argument("file")
    p.add_argument("--out", required=True)
    p.add_argument("--max-rank", type=int, default=6)
    p.add_argument("--base-budget", type=int, default=3)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
