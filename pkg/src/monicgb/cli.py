"""Command-line front end.

Exit codes: 0 for success or a positive verdict, 1 for a negative verdict
(not a Groebner basis, not a member, completion aborted), 2 for usage or
input errors.  All output is deterministic line-oriented text; the formats
are documented in the README.
"""

from __future__ import annotations

import argparse
import sys

from .groebner import (CompletionResult, UncertifiedBasisError, check_gb,
                       membership, try_complete)
from .lh import check_theorem_3_3, lh_presentation
from .pbw import count_normal_words, normal_words, pbw_verdict
from .presentation import (ParseError, Presentation, format_presentation,
                           parse_poly, parse_presentation)
from .presets import PRESET_NAMES, preset
from .reduction import Reducer
from .rings import (CoeffSyntaxError, LaurentZ, NonUnitError, QQ,
                    RingMismatchError, Zmod, ZZ)


class CliError(Exception):
    """Input or usage problem; maps to exit code 2."""


def _load(path: str) -> Presentation:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_presentation(text)


def _parse_ring_arg(text: str):
    parts = text.replace(":", " ").split()
    if not parts:
        raise CliError("empty ring specification")
    head = parts[0]
    if head == "Z" and len(parts) == 1:
        return ZZ
    if head == "Q" and len(parts) == 1:
        return QQ
    if head == "Zmod" and len(parts) == 2 and parts[1].isdigit():
        return Zmod(int(parts[1]))
    if head == "LaurentZ" and len(parts) <= 2:
        return LaurentZ(parts[1] if len(parts) == 2 else "q")
    raise CliError(f"bad ring specification {text!r}; "
                   f"use Z, Q, 'Zmod n' or 'LaurentZ sym'")


def cmd_check(args, out) -> int:
    pres = _load(args.file)
    report = check_gb(list(pres.relations), pres.order, threads=args.threads)
    print(report.summary_line(pres.variables), file=out)
    if report.removed:
        dropped = " ".join(str(i) for i in report.removed)
        print(f"note: removed LM-redundant relation(s) {dropped}", file=out)
    return 0 if report.verdict else 1


def cmd_overlaps(args, out) -> int:
    pres = _load(args.file)
    report = check_gb(list(pres.relations), pres.order)
    for line in report.kv_lines(pres.variables):
        print(line, file=out)
    return 0


def cmd_nf(args, out) -> int:
    pres = _load(args.file)
    f = parse_poly(args.poly, pres)
    result = Reducer(list(pres.relations), pres.order).divide(f)
    print(pres.format_poly(result.remainder), file=out)
    if args.trace:
        for step in result.steps:
            print(step.format(pres.variables), file=out)
    return 0


def cmd_member(args, out) -> int:
    pres = _load(args.file)
    f = parse_poly(args.poly, pres)
    member, witness = membership(f, list(pres.relations), pres.order)
    if member:
        print("MEMBER yes", file=out)
        return 0
    print(f"MEMBER no | normal form {pres.format_poly(witness.remainder)}", file=out)
    return 1


def cmd_normal_words(args, out) -> int:
    pres = _load(args.file)
    patterns = [g.lm() for g in pres.relations]
    if args.count_only:
        for d in range(args.max_deg + 1):
            count = count_normal_words(patterns, pres.weights, d)
            print(f"deg {d}: {count}", file=out)
        return 0
    for w in normal_words(patterns, pres.order, max_degree=args.max_deg,
                          weights=pres.weights):
        print(pres.format_word(w), file=out)
    return 0


def cmd_pbw(args, out) -> int:
    pres = _load(args.file)
    verdict = pbw_verdict(pres)
    shape = "yes" if verdict.shape_ok else "no"
    gb = "yes" if verdict.gb_ok else "no"
    if verdict.pbw:
        print(f"PBW yes | shape {shape} | groebner {gb}"
              f" | basis {verdict.basis_description()}", file=out)
        return 0
    detail = ""
    if verdict.missing_pairs:
        pairs = " ".join(f"{b}*{a}" for b, a in verdict.missing_pairs)
        detail = f" | missing LMs {pairs}"
    print(f"PBW no | shape {shape} | groebner {gb}{detail}", file=out)
    return 1


def cmd_lh(args, out) -> int:
    pres = _load(args.file)
    derived = lh_presentation(pres, args.mode).presentation
    out.write(format_presentation(derived))
    return 0


def cmd_thm33(args, out) -> int:
    pres = _load(args.file)
    report = check_theorem_3_3(pres)
    print(report.summary_line(), file=out)
    return 0 if report.verdicts_equal or not report.asserted else 1


def cmd_complete(args, out) -> int:
    pres = _load(args.file)
    result: CompletionResult = try_complete(list(pres.relations), pres.order,
                                            max_rounds=args.max_rounds,
                                            max_degree=args.max_deg)
    if result.completed:
        print(f"COMPLETION completed | rounds {result.rounds}"
              f" | relations {len(result.relations)}", file=out)
        for rel in result.relations:
            print(f"rel {pres.format_poly(rel)}", file=out)
        return 0
    if result.status == "aborted_nonunit":
        r = result.offending
        print(f"COMPLETION aborted_nonunit | remainder {pres.format_poly(r)}"
              f" | leading coefficient not a unit", file=out)
    else:
        print(f"COMPLETION aborted_limit | rounds {result.rounds}"
              f" | relations {len(result.relations)}", file=out)
    return 1


def cmd_preset(args, out) -> int:
    params = {}
    for item in args.set or []:
        if "=" not in item:
            raise CliError(f"--set expects key=value, got {item!r}")
        key, value = item.split("=", 1)
        params[key.strip()] = value.strip()
    ring = _parse_ring_arg(args.ring) if args.ring else None
    try:
        pres = preset(args.name, ring, params)
    except (ValueError, KeyError) as exc:
        raise CliError(str(exc)) from exc
    out.write(format_presentation(pres))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monicgb",
        description="Verify monic Groebner bases in free algebras over "
                    "commutative coefficient rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="run the overlap termination criterion")
    p.add_argument("file")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("overlaps", help="list every overlap with its reduction")
    p.add_argument("file")
    p.set_defaults(func=cmd_overlaps)

    p = sub.add_parser("nf", help="normal form of a polynomial")
    p.add_argument("file")
    p.add_argument("--poly", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_nf)

    p = sub.add_parser("member", help="ideal membership on a certified basis")
    p.add_argument("file")
    p.add_argument("--poly", required=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("normal-words", help="enumerate or count normal words")
    p.add_argument("file")
    p.add_argument("--max-deg", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_normal_words)

    p = sub.add_parser("pbw", help="ordered-product basis verdict")
    p.add_argument("file")
    p.set_defaults(func=cmd_pbw)

    p = sub.add_parser("lh", help="emit a leading-homogeneous presentation")
    p.add_argument("file")
    p.add_argument("--mode", choices=["n", "b"], required=True)
    p.set_defaults(func=cmd_lh)

    p = sub.add_parser("thm33", help="compare a presentation with its "
                                     "weighted-top presentation")
    p.add_argument("file")
    p.set_defaults(func=cmd_thm33)

    p = sub.add_parser("complete", help="best-effort completion")
    p.add_argument("file")
    p.add_argument("--max-rounds", type=int, default=8)
    p.add_argument("--max-deg", type=int, default=24)
    p.set_defaults(func=cmd_complete)

    p = sub.add_parser("preset", help="write a named family presentation")
    p.add_argument("name", choices=PRESET_NAMES)
    p.add_argument("--ring")
    p.add_argument("--set", action="append", metavar="KEY=VALUE")
    p.set_defaults(func=cmd_preset)

    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors; keep that contract
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (CliError, ParseError, CoeffSyntaxError, RingMismatchError,
            NonUnitError, UncertifiedBasisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
