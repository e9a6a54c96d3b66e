"""Command-line entry point.

Exit codes: 0 success, 1 invalid parameters, 2 a verification failed on
parameters the hypotheses accept, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct as cs
from . import enumeration as en
from . import suite
from .field import FieldError, eta, field_for_r, field_new
from .grs import CriterionError, GrsCode
from .verify import is_almost_self_dual, is_self_dual, is_self_orthogonal

EXIT_OK, EXIT_INVALID, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _field_args(args):
    if getattr(args, "r", None) is not None:
        return field_for_r(args.r)
    if args.p is None or args.m is None:
        raise UsageError("give --p and --m, or --r")
    return field_new(args.p, args.m)


def _q_args(args):
    if args.r is not None:
        return args.r * args.r
    if args.p is None or args.m is None:
        raise UsageError("give --r, or --p and --m")
    return args.p ** (2 * args.m)


def cmd_field_info(args, out):
    ctx = _field_args(args)
    info = ctx.to_dict()
    info.update({"q": ctx.q, "r": ctx.r, "tables": ctx.has_tables,
                 "eta(-1)": eta(ctx, ctx.neg(1)),
                 "q-1 factors": {str(k): v for k, v in sorted(ctx.q_minus_1_factors.items())}})
    out.write(_dump(info))
    return EXIT_OK


def _verdict_for(code, variant, mode="auto", seed=0):
    if variant in ("so1", "so3"):
        return is_self_orthogonal(code)
    if variant == "asd":
        return is_almost_self_dual(code)
    return is_self_dual(code, mode=mode, seed=seed)


def cmd_construct(args, out):
    ctx = _field_args(args)
    params = cs.TheoremParams(ctx, args.family, args.e1, args.e2, args.s, args.t,
                              tuple(args.i_indices) if args.i_indices else None,
                              tuple(args.j_indices) if args.j_indices else None)
    report = cs.validate(params)
    if not report.applies(args.variant):
        for cond, msg in report.errors:
            print(f"invalid parameters [{cond}]: {msg}", file=sys.stderr)
        for cond in report.failed.get(args.variant, []):
            print(f"variant {args.variant} not available: condition '{cond}' fails",
                  file=sys.stderr)
        return EXIT_INVALID
    S = cs.build_eval_set(params)
    profile = cs.character_profile(ctx, S)
    try:
        if args.variant in cs.SELF_DUAL_VARIANTS:
            code = cs.construct_code(params, args.variant)
        elif args.variant == "asd":
            code = cs.construct_almost_self_dual(params)
        else:
            if args.k is None:
                raise UsageError("--k is required for self-orthogonal variants")
            code = cs.construct_self_orthogonal(params, args.k, args.variant)
    except cs.ParameterError as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CriterionError as exc:
        print(f"FALSIFIED: criterion failed on accepted parameters: {exc} "
              f"(witnesses {list(exc.witnesses)[:8]})", file=sys.stderr)
        print(_dump({"case_report": report.to_dict(),
                     "character_profile": profile.to_dict()}), file=sys.stderr)
        return EXIT_FALSIFIED
    verdict = _verdict_for(code, args.variant, seed=args.seed)
    export = code.to_dict()
    export["case_report"] = report.to_dict()
    export["character_profile"] = profile.to_dict()
    export["verdict"] = verdict.to_dict()
    text = _dump(export)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        out.write(f"[{code.n},{code.k}] code written to {args.out}; "
                  f"{verdict.property}: {'pass' if verdict.passed else 'FAIL'} ({verdict.mode})\n")
    else:
        out.write(text)
    if not verdict.passed or not profile.agrees:
        print(f"FALSIFIED: {_dump(verdict.to_dict())}{_dump(profile.to_dict())}",
              file=sys.stderr)
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_verify(args, out):
    with open(args.input) as fh:
        data = json.load(fh)
    code = GrsCode.from_dict(data)
    variant = code.provenance.get("variant", "n")
    mode = "full" if args.full else ("sampled" if args.sampled else "auto")
    verdict = _verdict_for(code, variant, mode=mode, seed=args.seed)
    out.write(_dump(verdict.to_dict()))
    return EXIT_OK if verdict.passed else EXIT_FALSIFIED


def cmd_enumerate(args, out):
    q = _q_args(args)
    fam = args.family.upper()
    if fam in ("T31", "T32"):
        records = en.lengths_theorem(q, fam)
    elif fam == "REF18":
        records = en.ref18_records(q)
    elif fam == "REF20":
        records = en.ref20_records(q)
    else:
        raise UsageError(f"unknown family {args.family!r}")
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            en.write_csv(records, q, fh)
        out.write(f"{len(records)} lengths written to {args.csv}\n")
    else:
        en.write_csv(records, q, out)
    return EXIT_OK


def cmd_coverage(args, out):
    q = _q_args(args)
    report = en.coverage(q)
    out.write(_dump(report.to_dict()) if args.json else report.render() + "\n")
    return EXIT_OK


def cmd_examples(args, out):
    status = EXIT_OK
    for r, n, ok in suite.example_membership():
        out.write(f"{'PASS' if ok else 'FAIL'} example length {n} over GF({r}^2)\n")
        if not ok:
            status = EXIT_FALSIFIED
    for r in args.small_r:
        ctx = field_for_r(r)
        total = bad = 0
        for res in suite.sweep_field(ctx):
            total += 1
            if not (res.passed and res.profile_agrees):
                bad += 1
                out.write(f"FAIL {res.label()} witness={res.detail}\n")
        out.write(f"{'PASS' if not bad else 'FAIL'} q={ctx.q}: {total} codes, {bad} failures\n")
        if bad:
            status = EXIT_FALSIFIED
    if args.instances:
        for r, (_, lengths) in suite.EXAMPLE_LENGTHS.items():
            n = min(lengths)
            code, prof, verdict = suite.example_instance(r, n)
            ok = verdict.passed and prof.constant and prof.agrees
            out.write(f"{'PASS' if ok else 'FAIL'} sampled self-duality of the "
                      f"[{code.n},{code.k}] code over GF({r}^2)\n")
            if not ok:
                status = EXIT_FALSIFIED
    return status


def build_parser():
    ap = _Parser(prog="mdsdual", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def field_opts(p, allow_r=False):
        p.add_argument("--p", type=int)
        p.add_argument("--m", type=int)
        if allow_r:
            p.add_argument("--r", type=int)

    p = sub.add_parser("field-info", help="describe GF(p^(2m))")
    field_opts(p, allow_r=True)
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("construct", help="build and verify one code")
    field_opts(p)
    p.add_argument("--family", choices=cs.FAMILIES, required=True)
    p.add_argument("--e1", type=int, required=True)
    p.add_argument("--e2", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--variant", choices=cs.SELF_DUAL_VARIANTS + cs.SO_VARIANTS,
                   required=True)
    p.add_argument("--k", type=int, help="dimension for so1/so3")
    p.add_argument("--i-indices", type=int, nargs="+")
    p.add_argument("--j-indices", type=int, nargs="+")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="re-verify an exported code")
    p.add_argument("--in", dest="input", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--full", action="store_true")
    g.add_argument("--sampled", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list achievable lengths")
    field_opts(p, allow_r=True)
    p.add_argument("--family", required=True, help="T31, T32, REF18 or REF20")
    p.add_argument("--csv")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coverage", help="ratio table for one q")
    field_opts(p, allow_r=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("examples", help="example lengths and small-field sweep")
    p.add_argument("--small-r", type=int, nargs="*", default=list(suite.SMALL_R))
    p.add_argument("--instances", action="store_true",
                   help="also build one large example code per field")
    p.set_defaults(func=cmd_examples)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"mdsdual: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (FieldError, en.EnumerationError, cs.ParameterError) as exc:
        print(f"invalid parameters: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
