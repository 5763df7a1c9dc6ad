"""Command-line surface.

One verb per question. Ideal arguments take the pretty format
(`n=3; (x1*x2, x2*x3)`), the record format, or `@path` to read either
from a file. Exit codes: 0 success, 1 a check answered no, 2 usage or
parse error, 3 a resource guardrail fired.
"""
from __future__ import annotations

import argparse
import sys

from . import borel, polymatroid, saturation, verify
from .backend import backend_name
from .core import MonomialIdeal
from .errors import LimitError, ParseError
from .parsing import parse_any, parse_monomial, render_ideal


def _load_ideal(text: str) -> MonomialIdeal:
    if text.startswith("@"):
        with open(text[1:], "r", encoding="ascii") as fh:
            text = fh.read()
    return parse_any(text)


def _render_profile(profile: saturation.GradedQuotientProfile) -> str:
    lines = [f"empty = {'true' if profile.is_empty else 'false'}"]
    if not profile.is_empty:
        lines.append(f"alpha = {profile.alpha}")
        lines.append(f"beta = {profile.beta}")
    lines.append(f"sigma = {profile.sigma}")
    lines.append(f"gamma = {profile.gamma}")
    lines.append(f"length = {profile.length}")
    for d, c in profile.per_degree:
        lines.append(f"dim[{d}] = {c}")
    return "\n".join(lines)


def _cmd_sat(args) -> int:
    ideal = _load_ideal(args.ideal)
    res = saturation.saturate(ideal)
    if args.format == "records":
        sys.stdout.write(f"# sat {res.sat_number}\n")
        sys.stdout.write(render_ideal(res.saturated, "records"))
    else:
        print(f"sat = {res.sat_number}")
        print(f"chain_length = {len(res.chain)}")
        print(f"saturated = {render_ideal(res.saturated)}")
    return 0


def _cmd_sat_table(args) -> int:
    table = saturation.sat_table(_load_ideal(args.ideal), args.max_power)
    if args.format == "text":
        for k, s in table.rows:
            print(f"k = {k}: sat = {s}")
    else:
        sys.stdout.write(table.to_csv())
    if args.fit:
        fit = saturation.quasilinear_fit(table)
        print(fit.describe() if fit else "no exact periodic fit within this table")
    return 0


def _cmd_profile(args) -> int:
    print(_render_profile(saturation.quotient_profile(_load_ideal(args.ideal))))
    return 0


def _cmd_closure(args) -> int:
    gens = tuple(parse_monomial(t, args.n) for t in args.monomials)
    bound = args.bound if args.bound is not None else max(max(g.degree for g in gens), 1)
    ideal = borel.borel_closure(borel.BorelSpec(bound, gens, args.n))
    sys.stdout.write(render_ideal(ideal, args.format) + ("\n" if args.format == "text" else ""))
    return 0


def _cmd_precedes(args) -> int:
    v = parse_monomial(args.lower, args.n)
    u = parse_monomial(args.upper, args.n)
    print("true" if borel.precedes(v, u, args.bound) else "false")
    return 0


def _cmd_polymatroid_check(args) -> int:
    chk = polymatroid.is_polymatroidal(_load_ideal(args.ideal))
    if chk.ok:
        print("polymatroidal")
        return 0
    if chk.reason:
        print(f"not polymatroidal: {chk.reason}")
    else:
        u, v, i = chk.witness
        print(f"not polymatroidal: exchange fails for ({u}, {v}) at variable x{i}")
    return 1


def _cmd_decompose(args) -> int:
    pres = polymatroid.intersection_presentation(_load_ideal(args.ideal))
    print(pres.render())
    if args.sat:
        print(f"sat = {polymatroid.sat_from_presentation(pres)}")
    return 0


def _cmd_veronese_sat(args) -> int:
    ks = list(range(1, args.k + 1)) if args.upto else [args.k]
    rows = []
    if args.verify:
        base = borel.veronese(args.d, args.n)
        power = None
        reached = 0
        for k in ks:
            if power is None:
                power = base ** k
            else:
                for _ in range(k - reached):
                    power = power * base
            reached = k
            rows.append((k, borel.veronese_sat(args.d, args.n, k),
                         saturation.saturate(power).sat_number))
    else:
        rows = [(k, borel.veronese_sat(args.d, args.n, k), None) for k in ks]
    if args.format == "csv":
        if args.verify:
            print("k,d,n,expected,computed,pass")
            for k, e, c in rows:
                print(f"{k},{args.d},{args.n},{e},{c},{'true' if e == c else 'false'}")
        else:
            print("k,sat")
            for k, e, _ in rows:
                print(f"{k},{e}")
    else:
        for k, e, c in rows:
            if c is None:
                print(f"k = {k}: sat = {e}")
            else:
                verdict = "ok" if e == c else "MISMATCH"
                print(f"k = {k}: formula = {e}, colon chain = {c} {verdict}")
    failed = any(c is not None and c != e for _, e, c in rows)
    return 1 if failed else 0


def _cmd_verify_paper(args) -> int:
    results = verify.run_checks(only=args.only)
    if not results:
        print(f"no checks match {args.only!r}", file=sys.stderr)
        return 2
    failed = False
    for r in results:
        print(f"{r.status} {r.name}: {r.detail}")
        failed = failed or (not r.ok and not r.info_only)
    return 1 if failed else 0


def _cmd_scaling_check(args) -> int:
    report = saturation.check_scaling_law(
        _load_ideal(args.ideal), args.max_power,
        assume_intersection_type=args.assume_intersection_type)
    print(report.describe())
    return 0 if report.holds else 1


def _add_format(p, choices=("text", "csv", "records"), default="text"):
    p.add_argument("--format", choices=choices, default=default,
                   help=f"output format (default {default})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="idealsat",
        description="Saturation numbers of monomial ideals and the machinery around them.")
    parser.add_argument("--backend-info", action="store_true",
                        help="print the active kernel backend and exit")
    sub = parser.add_subparsers(dest="verb")

    p = sub.add_parser("sat", help="saturation number and saturated ideal")
    p.add_argument("ideal")
    _add_format(p, ("text", "records"))
    p.set_defaults(fn=_cmd_sat)

    p = sub.add_parser("sat-table", help="saturation numbers of the first K powers")
    p.add_argument("ideal")
    p.add_argument("-K", "--max-power", type=int, required=True)
    p.add_argument("--fit", action="store_true", help="append the exact periodic fit")
    _add_format(p, ("text", "csv"), default="csv")
    p.set_defaults(fn=_cmd_sat_table)

    p = sub.add_parser("profile", help="degreewise profile of saturation/ideal")
    p.add_argument("ideal")
    p.set_defaults(fn=_cmd_profile)

    p = sub.add_parser("closure", help="smallest bound-stable ideal containing the monomials")
    p.add_argument("-n", type=int, required=True, help="ambient variable count")
    p.add_argument("-k", "--bound", type=int, default=None,
                   help="exponent bound (default: generator degree)")
    p.add_argument("monomials", nargs="+")
    _add_format(p, ("text", "records"))
    p.set_defaults(fn=_cmd_closure)

    p = sub.add_parser("precedes", help="componentwise index-multiset order test")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", "--bound", type=int, required=True)
    p.add_argument("lower")
    p.add_argument("upper")
    p.set_defaults(fn=_cmd_precedes)

    p = sub.add_parser("polymatroid-check", help="symmetric exchange axiom test")
    p.add_argument("ideal")
    p.set_defaults(fn=_cmd_polymatroid_check)

    p = sub.add_parser("decompose", help="prime-power intersection presentation")
    p.add_argument("ideal")
    p.add_argument("--sat", action="store_true",
                   help="also print the saturation number read off the presentation")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("veronese-sat", help="closed-form Veronese saturation numbers")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--upto", action="store_true", help="all powers 1..k instead of just k")
    p.add_argument("--verify", action="store_true", help="compare against the colon chain")
    _add_format(p, ("text", "csv"))
    p.set_defaults(fn=_cmd_veronese_sat)

    p = sub.add_parser("verify-paper", help="run the built-in reproduction suite")
    p.add_argument("--only", default=None, help="run only checks whose name contains this")
    p.set_defaults(fn=_cmd_verify_paper)

    p = sub.add_parser("scaling-check", help="test sat(I^k) = k*sat(I) with stable primes")
    p.add_argument("ideal")
    p.add_argument("-K", "--max-power", type=int, required=True)
    p.add_argument("--assume-intersection-type", action="store_true")
    p.set_defaults(fn=_cmd_scaling_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.backend_info:
        print(f"backend = {backend_name()}")
        return 0
    if args.verb is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except LimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
