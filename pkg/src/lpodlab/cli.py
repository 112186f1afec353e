"""Command-line interface.

Exit codes: 0 success (``eq``/``normal-eq``: equivalent), 1 not equivalent
or a failed check, 2 usage or input errors, 3 enumeration cap exceeded,
4 a constructed context failed its own verification.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import semantics
from .equivalence import (
    ContextVerificationError,
    PreconditionError,
    normal_strong_eq,
    strong_eq,
)
from .fuzz import GeneratorConfig, run_campaign, write_reproducers
from .parser import DimacsError, LpodSyntaxError, parse_dimacs, parse_program, serialize_program
from .reductions import check_reduction, reduce_3sat
from .report import Listing, ReductionReport, emit_report, to_record
from .semantics import EnumerationCapError, NotNormalError

EXIT_OK, EXIT_DIFFERENT, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _program(path: str):
    try:
        return parse_program(_read(path))
    except LpodSyntaxError as exc:
        raise InputError(f"{path}: {exc}") from None


def _cnf(path: str, pad: bool):
    try:
        return parse_dimacs(_read(path), pad=pad)
    except (DimacsError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _fmt(args) -> str:
    return "structured" if args.json else "text"


def cmd_listing(args) -> int:
    program = _program(args.program)
    atoms = sorted(program.atoms) if args.json else program.atoms
    if args.command == "models":
        fn, kind = (
            (semantics.three_valued_models, "three_valued_models")
            if args.three_valued
            else (semantics.enumerate_models, "models")
        )
    else:
        fn, kind = {
            "answersets": (semantics.answer_sets, "answer_sets"),
            "preferred": (semantics.most_preferred, "most_preferred"),
            "stable": (semantics.gl_stable_models, "stable_models"),
        }[args.command]
    items = fn(program, cap=args.cap)
    sys.stdout.write(emit_report(Listing(kind, program, items, atoms), _fmt(args)))
    return EXIT_OK


def cmd_eq(args) -> int:
    p1, p2 = _program(args.first), _program(args.second)
    if args.command == "normal-eq":
        verdict = normal_strong_eq(p1, p2, cap=args.cap)
    else:
        verdict = strong_eq(p1, p2, mode=args.mode, cap=args.cap, with_context=not args.no_context)
    sys.stdout.write(emit_report(verdict, _fmt(args)))
    return EXIT_OK if verdict.equivalent else EXIT_DIFFERENT


def cmd_witness_context(args) -> int:
    p1, p2 = _program(args.first), _program(args.second)
    verdict = strong_eq(p1, p2, cap=args.cap)
    sys.stdout.write(emit_report(verdict, _fmt(args)))
    if args.output and verdict.context is not None:
        Path(f"{args.output}.lpod").write_text(serialize_program(verdict.context))
        Path(f"{args.output}.json").write_text(json.dumps(to_record(verdict), indent=2) + "\n")
    return EXIT_OK


def cmd_reduce(args) -> int:
    phi = _cnf(args.cnf, args.pad)
    red = reduce_3sat(phi)
    result = ReductionReport(phi, red)
    if args.output:
        Path(f"{args.output}_p1.lpod").write_text(serialize_program(red.p1))
        Path(f"{args.output}_p2.lpod").write_text(serialize_program(red.p2))
        Path(f"{args.output}_manifest.json").write_text(json.dumps(to_record(result), indent=2) + "\n")
    sys.stdout.write(emit_report(result, _fmt(args)))
    return EXIT_OK


def cmd_verify_reduction(args) -> int:
    phi = _cnf(args.cnf, args.pad)
    result = ReductionReport(phi, reduce_3sat(phi), check_reduction(phi, cap=args.cap))
    sys.stdout.write(emit_report(result, _fmt(args)))
    return EXIT_OK if result.check.ok else EXIT_DIFFERENT


def cmd_fuzz(args) -> int:
    try:
        cfg = GeneratorConfig(
            num_atoms=args.atoms,
            num_rules=args.rules,
            max_head=args.max_head,
            neg_prob=args.neg_prob,
            seed=args.seed,
            iterations=args.iterations,
            contexts_per_pair=args.contexts,
        )
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = run_campaign(cfg)
    if args.output:
        for path in write_reproducers(report, args.output):
            print(f"wrote {path}", file=sys.stderr)
    sys.stdout.write(emit_report(report, _fmt(args)))
    return EXIT_OK if report.ok else EXIT_DIFFERENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpodlab",
        description="Four-valued semantics and strong equivalence of LPODs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--json", action="store_true", help="emit the lpod-lab/1 JSON report")
        p.add_argument("--cap", type=int, default=semantics.DEFAULT_CAP, metavar="N",
                       help="maximum number of atoms to enumerate (default %(default)s)")
        p.set_defaults(func=func)
        return p

    p = add("models", cmd_listing, "list all models")
    p.add_argument("program")
    p.add_argument("--three-valued", action="store_true", help="only models without F*")
    for name, text in (
        ("answersets", "list answer sets"),
        ("preferred", "list most-preferred answer sets"),
        ("stable", "list Gelfond-Lifschitz stable models of a normal program"),
    ):
        add(name, cmd_listing, text).add_argument("program")

    p = add("eq", cmd_eq, "decide strong equivalence (exit 0 equivalent, 1 not)")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--mode", choices=("most_preferred", "all_answer_sets"), default="most_preferred")
    p.add_argument("--no-context", action="store_true", help="skip building the separating context")

    p = add("normal-eq", cmd_eq, "strong equivalence of normal programs via three-valued models")
    p.add_argument("first")
    p.add_argument("second")

    p = add("witness-context", cmd_witness_context, "build and verify a separating context program")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("-o", "--output", metavar="PREFIX", help="write PREFIX.lpod and PREFIX.json")

    p = add("reduce3sat", cmd_reduce, "translate a 3-CNF into two LPODs")
    p.add_argument("cnf")
    p.add_argument("--pad", action="store_true", help="pad short clauses by repeating the last literal")
    p.add_argument("-o", "--output", metavar="PREFIX",
                   help="write PREFIX_p1.lpod, PREFIX_p2.lpod, PREFIX_manifest.json")

    p = add("verify-reduction", cmd_verify_reduction, "check the reduction against a brute-force SAT oracle")
    p.add_argument("cnf")
    p.add_argument("--pad", action="store_true")

    p = add("fuzz", cmd_fuzz, "run a randomized differential campaign")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--iterations", type=int, default=1000)
    p.add_argument("--atoms", type=int, default=4)
    p.add_argument("--rules", type=int, default=4)
    p.add_argument("--max-head", type=int, default=2)
    p.add_argument("--neg-prob", type=float, default=0.3)
    p.add_argument("--contexts", type=int, default=3)
    p.add_argument("-o", "--output", metavar="PREFIX", help="write reproducers for violations")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        return args.func(args)
    except (InputError, NotNormalError, PreconditionError) as exc:
        print(f"lpodlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EnumerationCapError as exc:
        print(f"lpodlab: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ContextVerificationError as exc:
        print(f"lpodlab: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
