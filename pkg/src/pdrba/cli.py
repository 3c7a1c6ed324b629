"""Command-line front end.

Exit status: 0 on success, 1 for bad input (syntax, configuration, non-DRBW
arguments), 2 when a checked property fails.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from . import free, gsb, hurwitz
from .order import compare_zdp, verdict
from .parse import ParseError, parse, parse_word
from .poly import Poly, format_coeff, to_text
from .rewrite import STRATEGIES, AlgebraConfig, InvalidConfig, normal_form
from .words import to_str

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _rational(s: str) -> Fraction:
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {s!r}")


def _add_config(p: argparse.ArgumentParser):
    p.add_argument("--type", dest="kind", required=True, choices=("I", "II", "III"))
    p.add_argument("--lambda", dest="lam", type=_rational, default=None,
                   help="weight; defaults to 1 for type II, else 0")
    p.add_argument("--b", type=_rational, default=None,
                   help="mixing constant; defaults to 1 for type III, else 0")


def _add_json(p: argparse.ArgumentParser):
    p.add_argument("--json", action="store_true", help="structured output")


def config_from_args(args) -> AlgebraConfig:
    lam = args.lam if args.lam is not None else Fraction(1 if args.kind == "II" else 0)
    b = args.b if args.b is not None else Fraction(1 if args.kind == "III" else 0)
    return AlgebraConfig(args.kind, lam, b)


def poly_to_json(f: Poly) -> dict:
    return {
        "text": to_text(f),
        "terms": [{"coeff": format_coeff(c), "word": to_str(w)} for w, c in f.sorted_terms()],
    }


def poly_from_json(obj: dict) -> Poly:
    return Poly((parse_word(t["word"]), Fraction(t["coeff"])) for t in obj["terms"])


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="pdrba", description="Free para-differential Rota-Baxter algebras.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", help="normal form of an operated polynomial")
    _add_config(p)
    p.add_argument("--strategy", choices=STRATEGIES, default=STRATEGIES[0])
    p.add_argument("--seed", type=int, default=0, help="seed for the random strategy")
    _add_json(p)
    p.add_argument("expr")

    p = sub.add_parser("diamond", help="product of two DRBWs")
    _add_config(p)
    _add_json(p)
    p.add_argument("u")
    p.add_argument("v")

    p = sub.add_parser("derive", help="derivation d_X applied to a DRBW")
    _add_config(p)
    _add_json(p)
    p.add_argument("u")

    p = sub.add_parser("rb", help="Rota-Baxter operator P_X applied to a DRBW")
    _add_json(p)
    p.add_argument("u")

    p = sub.add_parser("audit", help="Groebner-Shirshov audit of the rewriting system")
    _add_config(p)
    p.add_argument("--max-letters", type=int, default=3)
    p.add_argument("--max-depth", type=int, default=2)
    p.add_argument("--labelings", choices=("canonical", "all"), default="canonical")
    _add_json(p)

    p = sub.add_parser("hurwitz-check", help="Hurwitz series invariant suite")
    p.add_argument("--fixture", required=True, choices=tuple(hurwitz.FIXTURES))
    p.add_argument("--trunc", type=int, default=hurwitz.DEFAULT_TRUNCATION)
    p.add_argument("--seed", type=int, default=0)
    _add_json(p)

    p = sub.add_parser("compare", help="compare two words in the monomial order")
    p.add_argument("u")
    p.add_argument("v")
    return ap


def _drbw(text: str):
    u = parse_word(text)
    free.check_drbw(u)
    return u


def _emit_poly(f: Poly, as_json: bool, out):
    if as_json:
        print(json.dumps(poly_to_json(f), indent=2), file=out)
    else:
        print(to_text(f), file=out)


_NEG_RATIONAL = re.compile(r"-\d+(/\d+)?$")


def _glue_negative_rationals(argv: list[str]) -> list[str]:
    # argparse reads "-1/2" as an option flag; attach it to its option
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--lambda", "--b") and i + 1 < len(argv) and _NEG_RATIONAL.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_negative_rationals(argv))
    try:
        cfg = config_from_args(args) if hasattr(args, "kind") else None
        cmd = args.command
        if cmd == "normalize":
            f = parse(args.expr)
            _emit_poly(normal_form(f, cfg, args.strategy, rng=random.Random(args.seed)), args.json, out)
        elif cmd == "diamond":
            u, v = _drbw(args.u), _drbw(args.v)
            _emit_poly(free.diamond(u, v, cfg), args.json, out)
        elif cmd == "derive":
            _emit_poly(free.d_X(_drbw(args.u), cfg), args.json, out)
        elif cmd == "rb":
            _emit_poly(Poly.word(free.P_X(_drbw(args.u))), args.json, out)
        elif cmd == "compare":
            print(verdict(compare_zdp(parse_word(args.u), parse_word(args.v))), file=out)
        elif cmd == "audit":
            if args.max_letters < 1 or args.max_depth < 1:
                raise InputError("--max-letters and --max-depth must be at least 1")
            report = gsb.audit(cfg, args.max_letters, args.max_depth, args.labelings)
            print(json.dumps(report.to_dict(), indent=2) if args.json else report.to_text(), file=out)
            return EXIT_OK if report.ok else EXIT_VIOLATION
        elif cmd == "hurwitz-check":
            if args.trunc < 1:
                raise InputError("--trunc must be at least 1")
            checks = hurwitz.invariant_suite(hurwitz.FIXTURES[args.fixture](), args.trunc, args.seed)
            if args.json:
                print(json.dumps([{"check": c.name, "passed": c.passed} for c in checks], indent=2), file=out)
            else:
                for c in checks:
                    print(c.line(), file=out)
            return EXIT_OK if all(c.passed for c in checks) else EXIT_VIOLATION
    except (ParseError, InvalidConfig, free.NotADRBW, InputError) as e:
        print(f"pdrba: error: {e}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
