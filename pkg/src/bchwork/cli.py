"""Command-line entry point: ``python -m bchwork`` or ``bchwork``."""

import argparse
import json
import sys

import numpy as np

from .bch import bose_distance, build_code, normalize_variant
from .cyclotomic import coset_of, kth_largest_leader_exhaustive
from .errors import BCHError
from .gf import make_field
from .weights import DEFAULT_BUDGET, weight_distribution


def _budget(text):
    if text.lower() in ("none", "inf", "unlimited"):
        return None
    return int(float(text)) if "e" in text.lower() else int(text, 0)


def _emit(obj):
    print(json.dumps(obj, indent=1, sort_keys=True, default=_default))


def _default(x):
    if isinstance(x, np.integer):
        return int(x)
    if isinstance(x, np.floating):
        return float(x)
    if isinstance(x, np.ndarray):
        return x.tolist()
    raise TypeError(f"cannot serialize {type(x).__name__}")


def cmd_field(args):
    F = make_field(args.p, args.deg)
    _emit({"p": F.p, "deg": F.d, "order": F.order, "modulus": list(F.modulus),
           "alpha": F.alpha, "alpha_order": F.order_of(F.alpha)})


def cmd_cosets(args):
    if args.of is not None:
        c = coset_of(args.of, args.q, args.m)
        _emit({"leader": c.leader, "size": c.size, "elements": list(c.elements)})
    else:
        leader, size = kth_largest_leader_exhaustive(args.top, args.q, args.m)
        _emit({"leader": leader, "size": size, "rank": args.top})


def cmd_code(args):
    code = build_code(args.q, args.m, args.delta, args.variant)
    if args.action == "params":
        _emit({"q": code.q, "m": code.m, "n": code.n, "k": code.k, "delta": code.delta,
               "variant": code.variant, "bose": bose_distance(code),
               "generator_coeffs": list(code.generator.coeffs)})
    elif args.action == "generator":
        _emit({"n": code.n, "k": code.k, "delta": code.delta, "variant": code.variant,
               "generator_coeffs": list(code.generator.coeffs),
               "generator": str(code.generator),
               "check_coeffs": list(code.check.coeffs)})
    else:
        dist = weight_distribution(code, budget=args.budget, cache_dir=args.cache_dir,
                                   workers=args.workers)
        if args.format == "csv":
            sys.stdout.write(dist.to_csv())
        elif args.format == "md":
            sys.stdout.write(dist.to_markdown())
        else:
            out = dist.to_json()
            out.update(k=code.k, delta=code.delta, variant=code.variant,
                       enumerator=dist.enumerator(), min_weight=dist.min_weight)
            _emit(out)


def cmd_trace(args):
    from . import trace as tr

    spec = tr.TraceCodeSpec(args.q, args.m, args.family)
    if args.action == "weights":
        dist, mult = tr.trace_weight_distribution(spec, budget=args.budget)
        out = dist.to_json()
        out.update(family=spec.family, multiplicity=mult, enumerator=dist.enumerator())
        _emit(out)
    elif args.action == "charsum-check":
        rep = tr.charsum_check(spec)
        _emit(rep)
        return 0 if rep["ok"] else 1
    elif args.action == "min-weight-census":
        rep = tr.min_weight_census(spec)
        _emit(rep)
        return 0 if rep["sets_equal"] else 1
    else:
        rep = tr.structure_facts(args.q, args.m)
        _emit(rep)
        return 0 if rep["ok"] else 1
    return 0


def cmd_verify(args):
    from .verify import reference_compare, verify_tables

    report = verify_tables(args.scope, budget=args.budget, cache_dir=args.cache_dir,
                           workers=args.workers)
    if args.reference:
        reference_compare(report, args.reference)
    if args.format == "md":
        sys.stdout.write(report.to_markdown())
    else:
        print(report.dumps())
    return report.exit_code()


def build_parser():
    ap = argparse.ArgumentParser(prog="bchwork", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field", help="primitive modulus and alpha order of GF(p^deg)")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--deg", type=int, required=True)
    p.set_defaults(func=cmd_field)

    p = sub.add_parser("cosets", help="q-cyclotomic cosets modulo q^m - 1")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--top", type=int, default=1, help="K-th largest coset leader")
    g.add_argument("--of", type=int, help="coset containing I")
    p.set_defaults(func=cmd_cosets)

    p = sub.add_parser("code", help="construct a BCH code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--delta", required=True, help="integer, auto2 or auto3")
    p.add_argument("--variant", type=normalize_variant, default="c", help="c or ctilde")
    p.add_argument("action", choices=("params", "generator", "weights"))
    p.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET)
    p.add_argument("--format", choices=("json", "csv", "md"), default="json")
    p.add_argument("--cache-dir")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("trace", help="trace-form codes and character sums")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--family", default="delta2",
                   choices=("delta2", "delta2-full", "delta3", "delta3-full"))
    p.add_argument("action", choices=("weights", "charsum-check", "min-weight-census", "facts"))
    p.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify", help="reproduce the tables and report pass/fail")
    p.add_argument("scope", choices=("lemmas", "weight-tables", "param-tables", "examples",
                                     "charsums", "duals", "all"))
    p.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET)
    p.add_argument("--cache-dir")
    p.add_argument("--reference", help="CSV of n,k,q,best_d[,kind]")
    p.add_argument("--format", choices=("json", "md"), default="json")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except BCHError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
