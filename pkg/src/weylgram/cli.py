"""Command-line interface.

Subcommands: triangle, derive, derive-chain, normal-order, contractions,
bijection, rook, verify, shift.  Output is deterministic; exit code 0 on
success (and all-pass verification), 1 on verification failure, 2 on
usage errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import bijections, numbers, verify, weyl
from .grammar import (
    GenSequence,
    Grammar,
    P_FAMILY,
    STIRLING_FAMILY,
    derive_chain,
    derive_n,
    parse_grammar,
    shift_apply,
)
from .ring import ParseError, parse_polynomial

SUITES = ("all", "grammar", "weyl", "bijections", "identities", "rook", "shift")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylgram",
        description="Grammar-derivative calculus, normal ordering, and the "
        "combinatorial triangles they generate; exact arithmetic throughout.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tri = sub.add_parser("triangle", help="print a number-family triangle")
    tri.add_argument("--family", required=True, choices=numbers.TRIANGLE_FAMILIES)
    tri.add_argument("--n", type=int, required=True, help="largest row index")
    tri.add_argument("--k", type=int, help="restrict output to one column")
    tri.add_argument("--param", action="append", default=[], metavar="KEY=VALUE")
    tri.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    tri.set_defaults(handler=_cmd_triangle)

    der = sub.add_parser("derive", help="apply the grammar derivative n times")
    _add_grammar_flags(der)
    der.add_argument("--start", required=True, help="start polynomial")
    der.add_argument("--steps", type=int, required=True)
    der.add_argument("--format", choices=("plain", "json"), default="plain")
    der.set_defaults(handler=_cmd_derive)

    chain = sub.add_parser(
        "derive-chain", help="apply a composition of derivatives (last listed acts first)"
    )
    chain.add_argument(
        "--chain",
        action="append",
        default=[],
        metavar="RULES",
        help="grammar text; repeat for each factor, written in operator order",
    )
    chain.add_argument("--start", required=True)
    chain.add_argument("--format", choices=("plain", "json"), default="plain")
    chain.set_defaults(handler=_cmd_derive_chain)

    norm = sub.add_parser("normal-order", help="normal-order a word over {a, c}")
    norm.add_argument("--word", required=True, help="e.g. 'caca' or '(ca)^3'")
    norm.add_argument(
        "--param",
        action="append",
        default=[],
        metavar="P=VALUE",
        help="weigh adjacent contracted pairs by a symbol (VALUE 'sym') or integer",
    )
    norm.add_argument("--format", choices=("plain", "json"), default="plain")
    norm.set_defaults(handler=_cmd_normal_order)

    contr = sub.add_parser("contractions", help="enumerate contractions of a word")
    contr.add_argument("--word", required=True)
    contr.add_argument("--format", choices=("plain", "json"), default="plain")
    contr.set_defaults(handler=_cmd_contractions)

    bij = sub.add_parser(
        "bijection", help="map a generation sequence to its contraction, or back"
    )
    bij.add_argument("--family", required=True, choices=(STIRLING_FAMILY, P_FAMILY))
    bij.add_argument("--seq", help="comma-separated entries, e.g. 1,2,1,3")
    bij.add_argument("--word", help="contraction word (with --edges)")
    bij.add_argument("--edges", help="contraction edges, e.g. '(4,5),(2,7)' or ''")
    bij.add_argument("--format", choices=("plain", "json"), default="plain")
    bij.set_defaults(handler=_cmd_bijection)

    rook = sub.add_parser("rook", help="rook numbers of a Ferrers board")
    rook.add_argument("--board", required=True, help="column heights, e.g. 1,1,3,3")
    rook.add_argument("--format", choices=("plain", "json"), default="plain")
    rook.set_defaults(handler=_cmd_rook)

    ver = sub.add_parser("verify", help="run verification suites")
    ver.add_argument("--suite", default="all", choices=SUITES)
    ver.add_argument("--max-n", type=int, default=None)
    ver.add_argument("--order", type=int, default=8, help="series order for the shift suite")
    ver.add_argument("--format", choices=("plain", "json"), default="plain")
    ver.set_defaults(handler=_cmd_verify)

    shift = sub.add_parser("shift", help="exponential of the derivative applied to a polynomial")
    _add_grammar_flags(shift)
    shift.add_argument("--start", required=True)
    shift.add_argument("--order", type=int, required=True)
    shift.add_argument("--format", choices=("plain", "json"), default="plain")
    shift.set_defaults(handler=_cmd_shift)

    return parser


def _add_grammar_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--grammar", help="rule text, e.g. 'x -> x*y; y -> y'")
    group.add_argument("--grammar-file", help="path to a rule file")


def _load_grammar(args: argparse.Namespace) -> Grammar:
    if args.grammar is not None:
        return parse_grammar(args.grammar)
    with open(args.grammar_file, encoding="utf-8") as handle:
        return parse_grammar(handle.read())


def _parse_params(pairs: Sequence[str], parser: argparse.ArgumentParser) -> dict[str, int | str]:
    params: dict[str, int | str] = {}
    for pair in pairs:
        key, sep, value = pair.partition("=")
        if not sep or not key:
            parser.error(f"--param needs KEY=VALUE, got {pair!r}")
        if key in params:
            parser.error(f"--param {key} given twice")
        if value == "sym":
            params[key] = key
        else:
            try:
                params[key] = int(value)
            except ValueError:
                parser.error(f"--param value must be an integer or 'sym', got {pair!r}")
    return params


def _cmd_triangle(args, parser) -> int:
    params = _parse_params(args.param, parser)
    if args.n < 1:
        parser.error("--n must be >= 1")
    try:
        triangle = numbers.build_triangle(args.family, args.n, params)
    except ValueError as exc:
        parser.error(str(exc))
    if args.k is not None:
        triangle = numbers.Triangle(
            triangle.family,
            triangle.params,
            tuple(entry for entry in triangle.entries if entry[1] == args.k),
        )
    if args.format == "csv":
        sys.stdout.write(triangle.to_csv())
    elif args.format == "json":
        print(triangle.to_json())
    else:
        sys.stdout.write(triangle.to_plain())
    return 0


def _cmd_derive(args, parser) -> int:
    if args.steps < 0:
        parser.error("--steps must be >= 0")
    grammar = _load_grammar(args)
    start = parse_polynomial(args.start)
    result = derive_n(grammar, start, args.steps)
    if args.format == "json":
        print(json.dumps({"result": str(result)}, indent=2))
    else:
        print(result)
    return 0


def _cmd_derive_chain(args, parser) -> int:
    if not args.chain:
        parser.error("need at least one --chain grammar")
    grammars = [parse_grammar(text) for text in args.chain]
    start = parse_polynomial(args.start)
    result = derive_chain(grammars, start)
    if args.format == "json":
        print(json.dumps({"result": str(result)}, indent=2))
    else:
        print(result)
    return 0


def _cmd_normal_order(args, parser) -> int:
    params = _parse_params(args.param, parser)
    word = weyl.WeylWord.parse(args.word)
    if params:
        if len(params) != 1:
            parser.error("normal-order takes at most one --param")
        (name, value), = params.items()
        form = weyl.normal_order_p(word, name)
        if isinstance(value, int):
            form = form.substitute(name, value)
    else:
        form = weyl.normal_order(word)
    if args.format == "json":
        payload = {
            "word": word.letters,
            "terms": [
                {"creation": i, "annihilation": j, "coefficient": str(coeff)}
                for (i, j), coeff in form.sorted_terms()
            ],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(form)
    return 0


def _cmd_contractions(args, parser) -> int:
    word = weyl.WeylWord.parse(args.word)
    contractions = weyl.enumerate_contractions(word)
    if args.format == "json":
        payload = []
        for contraction in contractions:
            stats = weyl.contraction_stats(contraction)
            payload.append(
                {
                    "word": word.letters,
                    "edges": [list(edge) for edge in contraction.edges],
                    "stats": {
                        "edges": stats.edge_count,
                        "adjacent_edges": stats.adjacent_edge_count,
                        "degree0_creation": stats.degree0_black_count,
                        "degree0_annihilation": stats.degree0_white_count,
                    },
                }
            )
        print(json.dumps(payload, indent=2))
    else:
        for contraction in contractions:
            print(contraction)
        print(f"count={len(contractions)}")
    return 0


_EDGE_RE = re.compile(r"\((\d+),(\d+)\)")


def _parse_edges(text: str, parser) -> tuple[tuple[int, int], ...]:
    cleaned = text.replace(" ", "")
    if not cleaned:
        return ()
    matches = list(_EDGE_RE.finditer(cleaned))
    joined = ",".join(m.group(0) for m in matches)
    if joined != cleaned:
        parser.error(f"--edges must look like '(i,j),(k,l)', got {text!r}")
    return tuple((int(m.group(1)), int(m.group(2))) for m in matches)


def _cmd_bijection(args, parser) -> int:
    if (args.seq is None) == (args.word is None):
        parser.error("give exactly one of --seq or --word (with --edges)")
    if args.seq is not None:
        try:
            entries = tuple(int(part) for part in args.seq.split(","))
        except ValueError:
            parser.error(f"--seq must be comma-separated integers, got {args.seq!r}")
        seq = GenSequence(entries, args.family)
        if args.family == STIRLING_FAMILY:
            contraction = bijections.seq_to_contraction_stirling(seq)
        else:
            contraction = bijections.seq_to_contraction_p(seq)
        if args.format == "json":
            print(
                json.dumps(
                    {
                        "sequence": list(entries),
                        "word": contraction.word.letters,
                        "edges": [list(edge) for edge in contraction.edges],
                    },
                    indent=2,
                )
            )
        else:
            print(contraction)
        return 0
    if args.edges is None:
        parser.error("--word needs --edges (possibly empty) to define a contraction")
    word = weyl.WeylWord.parse(args.word)
    contraction = weyl.Contraction(word, _parse_edges(args.edges, parser))
    if args.family == STIRLING_FAMILY:
        seq = bijections.contraction_to_seq_stirling(contraction)
    else:
        seq = bijections.contraction_to_seq_p(contraction)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "word": word.letters,
                    "edges": [list(edge) for edge in contraction.edges],
                    "sequence": list(seq.entries),
                },
                indent=2,
            )
        )
    else:
        print(seq)
    return 0


def _cmd_rook(args, parser) -> int:
    board = numbers.FerrersBoard.parse(args.board)
    counts = numbers.rook_numbers(board)
    if args.format == "json":
        print(json.dumps({"board": str(board), "rook_numbers": counts}, indent=2))
    else:
        print(",".join(str(c) for c in counts))
    return 0


def _cmd_verify(args, parser) -> int:
    max_n = args.max_n
    if args.order < 0 or args.order > 10:
        parser.error("--order must be between 0 and 10")
    reports: list[verify.Report] = []
    run_all = args.suite == "all"
    wanted = SUITES[1:] if run_all else (args.suite,)
    for suite in wanted:
        # with --suite all the shared --max-n is clamped to each suite's
        # cap; for a single suite an out-of-range value is a usage error
        if suite == "grammar":
            reports.append(
                verify.verify_grammar_theorems(max_n=_budget(parser, max_n, 8, 10, run_all))
            )
        elif suite == "weyl":
            reports.append(
                verify.verify_weyl(max_len=10, max_n=_budget(parser, max_n, 8, 10, run_all))
            )
        elif suite == "bijections":
            reports.append(verify.verify_bijections(max_n=_budget(parser, max_n, 6, 7, run_all)))
        elif suite == "identities":
            reports.append(verify.verify_identities(max_n=_budget(parser, max_n, 8, 10, run_all)))
        elif suite == "rook":
            reports.append(verify.verify_rook(max_n=_budget(parser, max_n, 4, 4, run_all)))
        elif suite == "shift":
            reports.append(verify.verify_shift(order=args.order))
    if args.format == "json":
        print(json.dumps([report.to_dict() for report in reports], indent=2))
    else:
        for report in reports:
            print(report.table())
        overall = all(report.passed for report in reports)
        print(f"overall: {'PASS' if overall else 'FAIL'}")
    return 0 if all(report.passed for report in reports) else 1


def _budget(parser, requested: int | None, default: int, cap: int, clamp: bool) -> int:
    if requested is None:
        return default
    if clamp:
        return max(1, min(requested, cap))
    if requested < 1 or requested > cap:
        parser.error(f"--max-n must be between 1 and {cap} for this suite")
    return requested


def _cmd_shift(args, parser) -> int:
    if args.order < 0:
        parser.error("--order must be >= 0")
    grammar = _load_grammar(args)
    start = parse_polynomial(args.start)
    series = shift_apply(grammar, start, args.order)
    if args.format == "json":
        payload = {
            "variable": series.variable,
            "order": series.order,
            "coefficients": [str(c) for c in series.coefficients],
        }
        print(json.dumps(payload, indent=2))
    else:
        print(series)
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args, parser)
    except (ParseError, ValueError, OSError) as exc:
        parser.error(str(exc))
        return 2  # unreachable; parser.error raises SystemExit


if __name__ == "__main__":
    sys.exit(main())
