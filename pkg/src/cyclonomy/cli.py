"""Command-line front end. Every command prints one JSON CommandResult."""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Any, Sequence

from . import descent, hilbert90, ideals, regularity, units
from .errors import CyclonomyError, ElementFormatError
from .field import CycInt, FieldContext, format_element, norm, parse_element, trace

CACHE_ENV = "CYCLONOMY_CACHE"


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    command: str
    ok: bool
    data: Any = None
    error: dict | None = None

    def as_dict(self) -> dict:
        out = {"command": self.command, "ok": self.ok}
        if self.ok:
            out["data"] = self.data
        else:
            out["error"] = self.error
        return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_elt(ctx: FieldContext, text: str) -> CycInt:
    a = parse_element(ctx, text)
    if not isinstance(a, CycInt):
        raise ElementFormatError(f"element {text!r} must have integer coefficients")
    return a


def _elt_json(a) -> list[str]:
    return [str(c) for c in a.coeffs]


def _cmd_regular(args):
    report = regularity.is_regular(args.p)
    if args.fail_on_irregular and not report.regular:
        raise _FoundIrregular(report)
    return report.as_dict()


class _FoundIrregular(Exception):
    def __init__(self, report):
        super().__init__(f"{report.p} is irregular: pairs {report.irregular_pairs}")


def _cmd_regular_range(args):
    return [r.as_dict() for r in regularity.regularity_range(args.a, args.b)]


def _cmd_bernoulli(args):
    if args.n < 0:
        raise UsageError("n must be >= 0")
    b = regularity.bernoulli(args.n)
    return {"n": b.n, "numerator": str(b.numerator), "denominator": str(b.denominator)}


def _cmd_class_number(args):
    cert = ideals.certify_class_number_one(FieldContext(args.p))
    lo, hi = cert.minkowski
    return {
        "p": cert.p,
        "minkowski_lo": str(lo),
        "minkowski_hi": str(hi),
        "primes_checked": [
            {**row, "principal_witness": [format_element(w) for w in row["principal_witness"]]}
            for row in cert.primes_checked
        ],
        "class_number": cert.class_number,
    }


def _cmd_split(args):
    s = ideals.prime_split(FieldContext(args.p), args.q)
    return {"q": s.q, "e": s.e, "f": s.f, "g": s.g, "norms": [str(P.norm) for P in s.primes]}


def _cmd_flt_search(args):
    sols = descent.flt_search(args.p, args.bound)
    return {"p": args.p, "bound": args.bound, "solutions": [t.as_list() for t in sols]}


def _cmd_classify(args):
    t = descent.FermatTriple(args.a, args.b, args.c, args.p)
    return {"p": args.p, "triple": t.as_list(), "case": descent.classify_case(t, args.p).value}


def _cmd_qtable(args):
    ctx = FieldContext(args.p)
    x, y = _int_elt(ctx, args.x), _int_elt(ctx, args.y)
    rows = descent.q_table(x, y)
    try:
        m0 = descent.eta_zero(x, y)
    except CyclonomyError:
        m0 = None
    return {
        "p": args.p,
        "rows": [{"m": r.m, "quotient": _elt_json(r.quotient), "residue": r.residue} for r in rows],
        "eta_zero": m0,
    }


def _cmd_hilbert90(args):
    ctx = FieldContext(args.p)
    eta = parse_element(ctx, args.eta)
    eps = hilbert90.hilbert90_witness(eta)
    G = hilbert90.GaloisGroup(ctx)
    return {
        "p": args.p,
        "generator": G.generator,
        "epsilon": _elt_json(eps),
        "verified": eta * G.apply(1, eps) == eps,
    }


def _cmd_kummer_check(args):
    ctx = FieldContext(args.p)
    u = units.as_unit(_int_elt(ctx, args.unit))
    if args.gen:
        gens = [units.as_unit(_int_elt(ctx, g)) for g in args.gen]
    else:
        gens = units.default_generators(ctx)
    root = units.kummer_search(u, gens, args.bound)
    return {
        "p": args.p,
        "unit": _elt_json(u.value),
        "congruent_integer": units.congruent_integer_mod_p(u),
        "generators": [_elt_json(g.value) for g in gens],
        "bound": args.bound,
        "found": root is not None,
        "root": None if root is None else _elt_json(root.value),
    }


def _cmd_unit_decompose(args):
    ctx = FieldContext(args.p)
    u = units.as_unit(_int_elt(ctx, args.unit))
    n, x = units.decompose_real(u)
    return {"p": args.p, "unit": _elt_json(u.value), "n": n, "x": _elt_json(x)}


def _cmd_norm(args):
    return {"value": str(norm(parse_element(FieldContext(args.p), args.element)))}


def _cmd_trace(args):
    return {"value": str(trace(parse_element(FieldContext(args.p), args.element)))}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", default=argparse.SUPPRESS)
    fmt.add_argument("--pretty", dest="pretty", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--cache", default=argparse.SUPPRESS, help="Bernoulli cache file")

    parser = _Parser(prog="cyclonomy", parents=[common], description=__doc__)
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def cmd(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = cmd("regular", _cmd_regular, "regularity report for one prime")
    sp.add_argument("p", type=int)
    sp.add_argument("--fail-on-irregular", action="store_true")

    sp = cmd("regular-range", _cmd_regular_range, "regularity reports for primes in [a, b]")
    sp.add_argument("a", type=int)
    sp.add_argument("b", type=int)

    sp = cmd("bernoulli", _cmd_bernoulli, "exact Bernoulli number B_n")
    sp.add_argument("n", type=int)

    sp = cmd("class-number", _cmd_class_number, "certify class number one (p = 3, 5, 7)")
    sp.add_argument("-p", type=int, required=True)

    sp = cmd("split", _cmd_split, "splitting of a rational prime q")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("-q", type=int, required=True)

    sp = cmd("flt-search", _cmd_flt_search, "search a^p + b^p = c^p with c <= bound")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)

    sp = cmd("classify", _cmd_classify, "Case I / Case II / Degenerate")
    sp.add_argument("-p", type=int, required=True)
    for name in ("a", "b", "c"):
        sp.add_argument(name, type=int)

    sp = cmd("qtable", _cmd_qtable, "quotients (x + zeta^m y)/lambda and residues")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)

    sp = cmd("hilbert90", _cmd_hilbert90, "witness eps with eta * sigma(eps) = eps")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--eta", required=True)

    sp = cmd("kummer-check", _cmd_kummer_check, "bounded search for a p-th root of a unit")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--unit", required=True)
    sp.add_argument("--gen", action="append")
    sp.add_argument("--bound", type=int, required=True)

    sp = cmd("unit-decompose", _cmd_unit_decompose, "u = zeta^n * x with x real")
    sp.add_argument("-p", type=int, required=True)
    sp.add_argument("--unit", required=True)

    for name, func in (("norm", _cmd_norm), ("trace", _cmd_trace)):
        sp = cmd(name, func, f"{name} down to Q")
        sp.add_argument("-p", type=int, required=True)
        sp.add_argument("element")

    return parser


_CACHED_COMMANDS = {"regular", "regular-range", "bernoulli"}


def run(argv: Sequence[str]) -> tuple[CommandResult, int, bool]:
    """Execute one command. Returns (result, exit code, pretty flag)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError("a command is required")
    except UsageError as exc:
        return CommandResult("", False, error={"code": "UsageError", "message": str(exc)}), 2, False

    pretty = getattr(args, "pretty", False)
    cache = getattr(args, "cache", None) or os.environ.get(CACHE_ENV)
    use_cache = cache and args.command in _CACHED_COMMANDS
    try:
        if use_cache:
            regularity.load_cache(cache)
        data = args.func(args)
        if use_cache:
            regularity.save_cache(cache)
    except UsageError as exc:
        return CommandResult(args.command, False, error={"code": "UsageError", "message": str(exc)}), 2, pretty
    except ElementFormatError as exc:
        return CommandResult(args.command, False, error={"code": exc.code, "message": str(exc)}), 2, pretty
    except _FoundIrregular as exc:
        return CommandResult(args.command, False, error={"code": "FoundIrregular", "message": str(exc)}), 1, pretty
    except CyclonomyError as exc:
        return CommandResult(args.command, False, error={"code": exc.code, "message": str(exc)}), 1, pretty
    return CommandResult(args.command, True, data=data), 0, pretty


def main(argv: Sequence[str] | None = None) -> int:
    result, code, pretty = run(sys.argv[1:] if argv is None else argv)
    print(json.dumps(result.as_dict(), indent=2 if pretty else None))
    return code


if __name__ == "__main__":
    sys.exit(main())
