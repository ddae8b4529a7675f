"""``superheis`` command line.

Exit codes: 0 success, 1 a check failed, 2 usage or parse error.
"""

import argparse
import json
import sys

from superheis.algebra import HeisenbergSpec, check_axioms
from superheis.bform import abelian_witness, is_abelian_excluding_center
from superheis.formulas import full_report
from superheis.graded import SuperDim
from superheis.latex import to_latex
from superheis.representation import (
    Representation, build_pi_even_center, build_pi_even_center_flipped, build_pi_odd_center, is_faithful,
    verify_representation,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _spec(args):
    if args.family is None:
        raise UsageError("--family is required")
    try:
        if args.family == "hmn":
            return HeisenbergSpec.even_center(args.m if args.m is not None else 0, args.n if args.n is not None else 0)
        if args.m not in (None, 0):
            raise UsageError("--m applies only to --family hmn")
        if args.n is None:
            raise UsageError("--family hn needs --n")
        return HeisenbergSpec.odd_center(args.n)
    except ValueError as exc:
        raise UsageError(str(exc))


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args):
    spec = _spec(args)
    if spec.is_even_center:
        if args.r is not None:
            raise UsageError("--r applies only to --family hn")
        build = build_pi_even_center_flipped if args.variant == "flipped" else build_pi_even_center
        rep = build(spec.m, spec.n)
    else:
        if args.variant == "flipped":
            raise UsageError("--variant flipped applies only to --family hmn; use --r for h_n")
        r = spec.n if args.r is None else args.r
        if not 0 <= r <= spec.n:
            raise UsageError("--r must lie in 0..%d" % spec.n)
        rep = build_pi_odd_center(spec.n, r)
    if args.format == "latex":
        text = to_latex(rep)
    elif args.format == "text":
        lines = ["%s on %s" % (spec.name(), rep.module_dim)]
        for name, m in zip(rep.algebra.basis_names, rep.images):
            terms = ", ".join("e_{%d,%d}: %s" % (r + 1, c + 1, x) for r, c, x in m.nonzero())
            lines.append("  %s -> %s" % (name, terms or "0"))
        text = "\n".join(lines) + "\n"
    else:
        text = rep.dumps() + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args):
    try:
        with open(args.path) as fh:
            rep = Representation.from_json(json.load(fh))
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise UsageError("cannot read representation %s: %s" % (args.path, exc))
    findings = []
    ax = check_axioms(rep.algebra)
    findings.extend(ax.violations)
    vr = verify_representation(rep)
    findings.extend(vr.violations)
    # the kernel test agrees with "z acts" only for genuine representations
    faithful = is_faithful(rep, cross_check=ax.ok and vr.ok)
    if rep.z_image.is_zero():
        findings.insert(0, "not faithful: z acts trivially")
    elif not faithful:
        findings.insert(0, "not faithful: nonzero kernel")
    ok = not findings
    if args.json:
        out = {"ok": ok, "axioms": ax.ok, "representation": vr.ok, "faithful": faithful,
               "module": rep.module_dim.to_json(), "findings": findings}
        print(json.dumps(out, indent=1))
    else:
        print("algebra %r, module %s" % (rep.algebra, rep.module_dim))
        print(str(ax).splitlines()[0])
        print(str(vr).splitlines()[0])
        for f in findings:
            print(f)
        print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(args):
    rep = full_report(_spec(args))
    text = json.dumps(rep.to_json(), indent=1) + "\n" if args.format == "json" else rep.text() + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_witness(args):
    spec = _spec(args)
    target = None
    if args.even is not None or args.odd is not None:
        target = SuperDim(args.even or 0, args.odd or 0)
    try:
        w = abelian_witness(spec, target)
    except ValueError as exc:
        raise UsageError(str(exc))
    from superheis.algebra import make_heisenberg

    g = make_heisenberg(spec)
    ok = is_abelian_excluding_center(g, w)
    if args.format == "json":
        text = json.dumps({"algebra": spec.to_json(), "superdim": w.superdim().to_json(), "abelian": ok,
                           "basis": [[x.to_json() for x in v.coords] for v in w.basis]}, indent=1) + "\n"
    else:
        lines = ["%s: abelian subalgebra avoiding z of super-dimension %s (%s)"
                 % (spec.name(), w.superdim(), "certified" if ok else "NOT abelian")]
        for v in w.basis:
            lines.append("  " + " + ".join("(%s)%s" % (c, g.basis_names[k]) for k, c in enumerate(v.coords) if c))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_selftest(args):
    from superheis import selftest

    res = selftest.run(args.max_m, args.max_n, args.max_hn, samples=args.samples,
                       isotropic_samples=args.isotropic_samples, seed=args.seed, corrupted=args.corrupt)
    for w in res.warnings:
        print("warning: " + w, file=sys.stderr)
    for f in res.failures:
        print("FAIL " + f)
    print("%d specs, %d checks, %.2f s: %s" % (res.specs, res.checks, res.seconds, "ok" if res.ok else "FAILED"))
    return EXIT_OK if res.ok else EXIT_FAIL


def _family_args(p, with_r=False):
    p.add_argument("--family", choices=["hmn", "hn"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    if with_r:
        p.add_argument("--r", type=int)
    p.add_argument("--out", help="write here instead of standard output")


def build_parser():
    p = _Parser(prog="superheis", description="Faithful representations of Heisenberg Lie superalgebras.")
    sub = p.add_subparsers(dest="verb")

    c = sub.add_parser("construct", help="build a minimal faithful representation")
    _family_args(c, with_r=True)
    c.add_argument("--variant", choices=["standard", "flipped"], default="standard")
    c.add_argument("--format", choices=["json", "latex", "text"], default="json")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check a representation file")
    v.add_argument("path")
    v.add_argument("--json", action="store_true", help="machine-readable report")
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("report", help="dimension formulas")
    _family_args(r)
    r.add_argument("--format", choices=["json", "text"], default="text")
    r.set_defaults(func=cmd_report)

    w = sub.add_parser("witness", help="largest abelian subalgebra avoiding the center")
    _family_args(w)
    w.add_argument("--even", type=int)
    w.add_argument("--odd", type=int)
    w.add_argument("--format", choices=["json", "text"], default="text")
    w.set_defaults(func=cmd_witness)

    s = sub.add_parser("selftest", help="run every invariant over a parameter grid")
    s.add_argument("--max-m", type=int, default=4)
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--max-hn", type=int, default=6)
    s.add_argument("--samples", type=int, default=5, help="random degenerations per representation")
    s.add_argument("--isotropic-samples", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--corrupt", action="store_true", help="include a corrupted fixture (must fail)")
    s.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.verb is None:
            raise UsageError("a subcommand is required: construct, verify, report, witness, selftest")
        return args.func(args)
    except UsageError as exc:
        print("superheis: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
