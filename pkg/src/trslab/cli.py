"""Command-line frontend.

Subcommands:
    trslab field <spec>
    trslab code <descriptor> {radius|mindist}
    trslab deepholes <descriptor> {test --syndrome w | enumerate}
    trslab charsum <kind> --field <spec> [params]
    trslab verify [--check id] [--filter glob] [--format json|csv|text]
                  [--jobs N] [--max-ops N] [--out path] [--seed N]

Exit codes: 0 all PASS/SKIPPED, 1 any FAIL, 2 usage error.
TRSLAB_BUDGET overrides the default operation caps; TRSLAB_BACKEND
selects the numba or numpy kernel path.
"""

from __future__ import annotations

import argparse
import json
import sys

from trslab import chars, checks, codes, deepholes as dh, reports
from trslab.errors import BudgetExceeded
from trslab.field import parse_field_spec


def _print(obj):
    print(json.dumps(obj, sort_keys=True))


def cmd_field(args) -> int:
    ctx = parse_field_spec(args.spec)
    _print(
        {
            "field": ctx.descriptor(),
            "p": ctx.p,
            "m": ctx.m,
            "q": ctx.q,
            "modulus": list(ctx.modulus),
            "primitive": ctx.primitive,
            "trace_of_primitive": ctx.trace(ctx.primitive),
        }
    )
    return reports.EXIT_OK


def cmd_code(args) -> int:
    code = codes.parse_code_descriptor(args.descriptor)
    if args.what == "radius":
        value = codes.covering_radius(code, args.max_ops)
    else:
        value = codes.min_distance(code)
    _print({"code": code.descriptor(), args.what: value, "n": code.n, "k": code.k})
    return reports.EXIT_OK


def cmd_deepholes(args) -> int:
    code = codes.parse_code_descriptor(args.descriptor)
    if args.what == "test":
        if args.syndrome is None:
            print("deepholes test requires --syndrome", file=sys.stderr)
            return reports.EXIT_USAGE
        w = tuple(int(x) for x in args.syndrome.split(","))
        verdict = dh.is_deep_hole_prop8(code, w, args.max_ops)
        _print(
            {
                "code": code.descriptor(),
                "syndrome": list(w),
                "is_deep_hole": verdict.is_deep_hole,
                "witness": list(verdict.witness) if verdict.witness else None,
                "method": verdict.method,
            }
        )
        return reports.EXIT_OK
    found = dh.enumerate_deep_holes(code, args.max_ops)
    _print(
        {
            "code": code.descriptor(),
            "deep_hole_classes": [list(s.w) for s in found],
            "class_count": len(found),
            "word_count": dh.deep_hole_word_count(code, found),
        }
    )
    return reports.EXIT_OK


def cmd_charsum(args) -> int:
    ctx = parse_field_spec(args.field)
    kind = args.kind
    out = {"field": ctx.descriptor(), "kind": kind}
    if kind == "gauss":
        psi = chars.MultiplicativeCharacter(ctx, args.psi)
        chi = chars.AdditiveCharacter(ctx, args.chi)
        g = chars.gauss_sum(psi, chi)
        out.update(
            value=[g.real, g.imag],
            magnitude=abs(g),
            expected_magnitude=(ctx.q**0.5 if args.psi % (ctx.q - 1) and args.chi else None),
        )
    elif kind == "monomial":
        v = chars.monomial_sum(ctx, args.a, args.b, args.n)
        bound = chars.monomial_sum_bound(ctx, args.n)
        out.update(
            value=[v.real, v.imag],
            brute_force=[v.real, v.imag],
            bound=bound,
            within_bound=abs(v) <= bound + 1e-6,
        )
    elif kind == "quadratic":
        bf = chars.quadratic_sum_brute(ctx, args.a2, args.a1, args.a0, args.b)
        if ctx.p == 2:
            cf = chars.quadratic_sum_closed_even(ctx, args.a2, args.a1, args.a0, args.b)
        else:
            cf = chars.quadratic_sum_closed(ctx, args.a2, args.a1, args.a0)
        out.update(
            closed_form=[cf.real, cf.imag],
            brute_force=[bf.real, bf.imag],
            agree=abs(cf - bf) <= chars.sum_tol(ctx.q),
        )
    elif kind == "quadric-count":
        cf = chars.count_quadric(ctx, args.a1, args.a2, args.b)
        bf = chars.count_quadric_brute(ctx, args.a1, args.a2, args.b)
        out.update(closed_form=cf, brute_force=bf, agree=cf == bf)
    elif kind == "cubic":
        cf = chars.cubic_sum_closed(ctx, args.a)
        bf = chars.cubic_sum_brute(ctx, args.a)
        out.update(
            closed_form=[cf.real, cf.imag],
            brute_force=[bf.real, bf.imag],
            agree=abs(cf - bf) <= chars.sum_tol(ctx.q),
        )
    elif kind == "surface-count":
        cf = chars.count_surface_cubic(ctx, args.a)
        bf = chars.count_surface_cubic_brute(ctx, args.a)
        out.update(closed_form=cf, brute_force=bf, agree=cf == bf)
    elif kind == "fermat-count":
        bf = chars.count_fermat_cubic(ctx, args.b)
        pair = chars.fermat_cubic_nonzero_pair(ctx, args.b)
        out.update(
            brute_force=bf,
            bound_ok=chars.fermat_cubic_bound_ok(ctx, bf),
            nonzero_pair=list(pair) if pair else None,
        )
    else:  # pragma: no cover - argparse restricts choices
        return reports.EXIT_USAGE
    _print(out)
    return reports.EXIT_OK


def cmd_verify(args) -> int:
    cfg = checks.RunConfig(
        field=args.field,
        k=args.k,
        theta=args.theta,
        max_ops=args.max_ops,
        jobs=args.jobs,
        seed=args.seed,
    )
    if args.check:
        if args.check not in checks.registered_checks():
            print(f"unknown check id {args.check!r}", file=sys.stderr)
            print(f"known checks: {', '.join(checks.registered_checks())}", file=sys.stderr)
            return reports.EXIT_USAGE
        result = [checks.run_check(args.check, cfg)]
    else:
        result = checks.run_suite(args.filter, cfg)
        if not result:
            print(f"warning: no checks match filter {args.filter!r}", file=sys.stderr)
    payload = reports.emit_many(result, args.format)
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.buffer.write(payload)
    return reports.aggregate_exit_code(result)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trslab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="describe a finite field")
    p.add_argument("spec", help="field spec, e.g. 2^3 or 2^3/1101")
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("code", help="covering radius / minimum distance")
    p.add_argument("descriptor", help="e.g. trs:q=2^3:k=5:theta=1:A=full")
    p.add_argument("what", choices=["radius", "mindist"])
    p.add_argument("--max-ops", type=int, default=None)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("deepholes", help="deep-hole test or enumeration")
    p.add_argument("descriptor")
    p.add_argument("what", choices=["test", "enumerate"])
    p.add_argument("--syndrome", help="comma-separated element indices, e.g. 0,0,1")
    p.add_argument("--max-ops", type=int, default=None)
    p.set_defaults(func=cmd_deepholes)

    p = sub.add_parser("charsum", help="character sums: closed form vs brute force")
    p.add_argument(
        "kind",
        choices=[
            "gauss",
            "monomial",
            "quadratic",
            "quadric-count",
            "cubic",
            "surface-count",
            "fermat-count",
        ],
    )
    p.add_argument("--field", required=True)
    p.add_argument("--psi", type=int, default=1, help="multiplicative character exponent")
    p.add_argument("--chi", type=int, default=1, help="additive character parameter")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--a0", type=int, default=0)
    p.add_argument("--a1", type=int, default=0)
    p.add_argument("--a2", type=int, default=1)
    p.set_defaults(func=cmd_charsum)

    p = sub.add_parser("verify", help="run registered theorem checks")
    p.add_argument("--check", help="single check id")
    p.add_argument("--filter", default="*", help="glob over check ids")
    p.add_argument("--format", choices=["json", "csv", "text"], default="json")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--max-ops", type=int, default=None)
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--out", help="write output to a file")
    p.add_argument("--field", help="restrict the grid to one field spec")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--theta", type=int, default=None)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return reports.EXIT_USAGE if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except BudgetExceeded as e:
        print(f"refused: {e}", file=sys.stderr)
        _print({"verdict": reports.SKIPPED, "estimated_ops": e.estimate, "budget": e.cap})
        return reports.EXIT_OK
    except (ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return reports.EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
