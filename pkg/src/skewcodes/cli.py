"""
Command-line front end.

Every subcommand builds one report dictionary, then prints it either as JSON
(``--json``) or as tab-separated tables.  Nothing is written to stdout until
the whole report has been computed, so failures never leave partial output.

Exit codes: 0 success, 1 negative verdict (``equiv``, ``witness``,
``isometry`` on an inequivalent pair), 2 usage or input error, 3 enumeration
budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import Counter

from . import code_lab as cl
from . import equivalence as eq
from .errors import EnumerationBudgetExceeded, NotARightDivisor, SkewCodesError
from .galois_field import FiniteField, bracket, parse_designator
from .skew_polynomial import SkewPolynomial

EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

SWEEP_LIST_LIMIT = 100_000


class UsageError(Exception):
    pass


# -- rendering ---------------------------------------------------------------

def _cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return ",".join(_cell(v) for v in value)
    if isinstance(value, dict):
        return ",".join(f"{k}:{_cell(v)}" for k, v in value.items())
    return str(value)


def render_table(report: dict) -> str:
    """Scalars as ``key<TAB>value`` lines; lists of records as titled tables."""
    lines = []
    sections = []
    for key, value in report.items():
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            sections.append((key, value))
        else:
            lines.append(f"{key}\t{_cell(value)}")
    for key, records in sections:
        lines.append("")
        lines.append(f"[{key}]")
        cols = list(records[0])
        lines.append("\t".join(cols))
        for rec in records:
            lines.append("\t".join(_cell(rec[c]) for c in cols))
    return "\n".join(lines)


def emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=2))
    else:
        print(render_table(report))


# -- argument handling -------------------------------------------------------

def _field(args) -> FiniteField:
    try:
        p, r = parse_designator(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return FiniteField(p, r, args.modulus)


def _aut(args, F: FiniteField):
    s = args.s if args.s is not None else (1 if F.r > 1 else 0)
    return F.frobenius(s)


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


def _element_fmt(F: FiniteField, pretty: bool):
    if pretty:
        return lambda a: None if a is None else F.render(a)
    return lambda a: a


def _parse_g(args, aut) -> SkewPolynomial:
    try:
        return SkewPolynomial.parse(aut, args.g)
    except ValueError as exc:
        raise UsageError(f"bad --g value {args.g!r}: {exc}") from None


def _code_descriptor(code, fmt, budget):
    desc = cl.describe(code, budget)
    desc["lambda"] = fmt(desc["lambda"])
    desc["g"] = [fmt(c) for c in desc["g"]]
    return desc


# -- subcommands -------------------------------------------------------------

def cmd_classes(args) -> tuple[dict, int]:
    _need(args, "n")
    F = _field(args)
    aut = _aut(args, F)
    ctx = eq.make_context(aut, args.n)
    fmt = _element_fmt(F, args.pretty)
    report = _classes_report(ctx, fmt)
    return report, 0


def _classes_report(ctx, fmt, queries=()):
    return {
        "field": ctx.field.designator,
        "s": ctx.s,
        "n": ctx.n,
        "class_count": ctx.class_count,
        "d": ctx.d,
        "representatives": [fmt(a) for a in eq.class_representatives(ctx)],
        "queries": list(queries),
    }


def _pair(args):
    _need(args, "n", "lam", "mu")
    F = _field(args)
    aut = _aut(args, F)
    lam, mu = F.validate(args.lam), F.validate(args.mu)
    ctx = eq.make_context(aut, args.n)
    rep = eq.report(ctx, lam, mu)
    return F, ctx, rep


def cmd_equiv(args) -> tuple[dict, int]:
    F, ctx, rep = _pair(args)
    fmt = _element_fmt(F, args.pretty)
    query = {
        "lambda": fmt(rep.lam),
        "mu": fmt(rep.mu),
        "equivalent": rep.equivalent,
        "witness": fmt(rep.witness),
    }
    return _classes_report(ctx, fmt, [query]), 0 if rep.equivalent else EXIT_NEGATIVE


def cmd_witness(args) -> tuple[dict, int]:
    F, ctx, rep = _pair(args)
    fmt = _element_fmt(F, args.pretty)
    report = {
        "field": F.designator,
        "s": ctx.s,
        "n": ctx.n,
        "lambda": fmt(rep.lam),
        "mu": fmt(rep.mu),
        "witness": fmt(rep.witness),
        "all_witnesses": [fmt(a) for a in eq.witnesses_by_search(ctx, rep.lam, rep.mu)],
    }
    return report, 0 if rep.equivalent else EXIT_NEGATIVE


def _code_ctx(args):
    _need(args, "n", "lam")
    F = _field(args)
    aut = _aut(args, F)
    return F, cl.CodeContext(aut, args.n, F.validate(args.lam))


def cmd_codes(args) -> tuple[dict, int]:
    F, ctx = _code_ctx(args)
    fmt = _element_fmt(F, args.pretty)
    codes = cl.enumerate_codes(ctx, budget=args.budget)
    report = {
        "field": F.designator,
        "s": ctx.aut.s,
        "n": ctx.n,
        "lambda": fmt(ctx.lam),
        "count": len(codes),
        "dimension_counts": {str(k): v for k, v in cl.dimension_counts(codes).items()},
        "codes": [_code_descriptor(c, fmt, args.budget) for c in codes],
    }
    return report, 0


def cmd_mindist(args) -> tuple[dict, int]:
    F, ctx = _code_ctx(args)
    _need(args, "g")
    code = cl.make_code(ctx, _parse_g(args, ctx.aut))
    return _code_descriptor(code, _element_fmt(F, args.pretty), args.budget), 0


def cmd_isometry(args) -> tuple[dict, int]:
    _need(args, "n", "lam", "mu", "g")
    F = _field(args)
    aut = _aut(args, F)
    fmt = _element_fmt(F, args.pretty)
    lam, mu = F.validate(args.lam), F.validate(args.mu)
    src = cl.make_code(cl.CodeContext(aut, args.n, mu), _parse_g(args, aut))
    ctx = eq.make_context(aut, args.n)
    alpha = eq.find_witness(ctx, lam, mu)
    report = {
        "field": F.designator,
        "s": aut.s,
        "n": args.n,
        "lambda": fmt(lam),
        "mu": fmt(mu),
        "equivalent": alpha is not None,
        "witness": fmt(alpha),
        "source_g": [fmt(c) for c in src.g.coeffs],
    }
    if alpha is None:
        return report, EXIT_NEGATIVE
    image = cl.apply_isometry(src, lam, alpha)
    wd_src = cl.weight_distribution(src, args.budget)
    wd_img = cl.weight_distribution(image, args.budget)
    report.update(
        {
            "image_g": [fmt(c) for c in image.g.coeffs],
            "k": src.k,
            "image_k": image.k,
            "image_divides": image.g.right_divides(image.ctx.modulus),
            "weight_distribution": wd_src,
            "image_weight_distribution": wd_img,
            "weight_distribution_equal": wd_src == wd_img,
        }
    )
    return report, 0


def _expected_rule(F: FiniteField, s: int):
    """Known closed form for the class count, or None."""
    if F.p == 2 and F.r == 3 and s in (1, 2):
        return "gcd(n,3)", lambda n: 7 if n % 3 == 0 else 1
    if F.p == 2 and s == 1:
        return "2^gcd(n,r)-1", lambda n: eq.binary_class_count(n, F.r)
    return None, None


def cmd_sweep(args) -> tuple[dict, int]:
    F = _field(args)
    aut = _aut(args, F)
    n_min, n_max = args.n_min, args.n_max
    if n_min < 1 or n_max < n_min:
        raise UsageError("need 1 <= --n-min <= --n-max")
    if args.list and n_max - n_min + 1 > SWEEP_LIST_LIMIT:
        raise UsageError(f"--list is limited to {SWEEP_LIST_LIMIT} values of n")
    rule_name, rule = _expected_rule(F, aut.s)
    hist = Counter()
    violations = []
    rows = []
    for n, count in eq.sweep_class_counts(aut, n_max, n_min):
        hist[count] += 1
        if rule is not None and rule(n) != count:
            violations.append(n)
        if args.list:
            rows.append({"n": n, "class_count": count})
    report = {
        "field": F.designator,
        "s": aut.s,
        "n_min": n_min,
        "n_max": n_max,
        "distribution": {str(k): v for k, v in sorted(hist.items())},
        "expected_rule": rule_name,
        "violations": violations,
    }
    if args.list:
        report["counts"] = rows
    return report, 0


def cmd_field_info(args) -> tuple[dict, int]:
    F = _field(args)
    report = {
        "field": F.designator,
        "p": F.p,
        "r": F.r,
        "q": F.q,
        "modulus": F.modulus_encoding,
        "modulus_coeffs": list(F.modulus),
        "xi": F.xi,
        "automorphisms": [
            {
                "s": a.s,
                "m": a.m,
                "fixed_subfield_size": len(a.fixed_subfield()),
                "bracket_2": bracket(F.p, a.s, 2),
            }
            for a in F.automorphisms()
        ],
    }
    if F.q <= 256:
        report["elements"] = [
            {
                "encoding": a,
                "coeffs": list(F.coeffs(a)),
                "log": F.discrete_log(a) if a else None,
                "pretty": F.render(a),
            }
            for a in F.elements()
        ]
    return report, 0


COMMANDS = {
    "classes": (cmd_classes, "class count, d and representatives"),
    "equiv": (cmd_equiv, "decide lambda ~ mu (exit 1 when inequivalent)"),
    "witness": (cmd_witness, "find alpha with lambda N_n(alpha) = mu"),
    "codes": (cmd_codes, "all skew constacyclic codes of length n"),
    "mindist": (cmd_mindist, "dimension, minimum distance and weights of one code"),
    "isometry": (cmd_isometry, "map a mu-code to an equivalent lambda-code"),
    "sweep": (cmd_sweep, "class counts over a range of lengths"),
    "field-info": (cmd_field_info, "field tables and automorphisms"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewcodes", description="Skew constacyclic codes and (n, sigma)-equivalence."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--field", required=True, help="field designator p^r, e.g. 2^3")
        sp.add_argument("--modulus", type=int, help="packed base-p modulus, e.g. 7 for t^2+t+1")
        sp.add_argument("--s", type=int, help="Frobenius exponent (default 1, or 0 for prime fields)")
        sp.add_argument("--n", type=int, help="code length")
        sp.add_argument("--lambda", dest="lam", type=int, help="constant lambda (encoding)")
        sp.add_argument("--mu", type=int, help="constant mu (encoding)")
        sp.add_argument("--g", help="generator coefficients, lowest degree first: 1,0,1")
        sp.add_argument("--budget", type=int, default=cl.DIVISOR_BUDGET, help="enumeration budget")
        sp.add_argument("--json", action="store_true", help="JSON instead of tab-separated tables")
        sp.add_argument("--pretty", action="store_true", help="render elements as powers of xi")
        if name == "sweep":
            sp.add_argument("--n-min", type=int, default=1)
            sp.add_argument("--n-max", type=int, default=10**6)
            sp.add_argument("--list", action="store_true", help="print one row per n")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = COMMANDS[args.command][0]
    try:
        if args.n is not None and args.n < 1:
            raise UsageError("--n must be >= 1")
        report, code = handler(args)
    except EnumerationBudgetExceeded as exc:
        print(f"skewcodes: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NotARightDivisor as exc:
        print(f"skewcodes: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, SkewCodesError, ValueError) as exc:
        print(f"skewcodes: {exc}", file=sys.stderr)
        return EXIT_USAGE
    emit(report, args.json)
    return code


if __name__ == "__main__":
    sys.exit(main())
