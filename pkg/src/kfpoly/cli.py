"""Command line interface: kfpoly {kostka,tableaux,cyclage,validate}."""
import argparse
import json
import sys

from .charge import chi_trace, kostka_statistic
from .closed_forms import k_a2_weight0, k_b2_weight0, k_c2_weight0, small_matrix_entry
from .cyclage import cyclage_json, export_cyclage_graph, weight_tableaux
from .errors import CapExceeded, UnsupportedError
from .kostant import kostka_def
from .pieri import morris_kostka
from .rootdata import RootSystem, is_dominant, parse_weight
from .tableaux import tableaux_of
from .validate import run

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNSUPPORTED, EXIT_CAP = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def _weight(text, n, family, what, dominant=True):
    try:
        w = parse_weight(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError("cannot parse %s %r" % (what, text))
    if len(w) != n:
        raise UsageError("%s needs %d comma-separated parts" % (what, n))
    if dominant and not is_dominant(family, w):
        raise UsageError("%s=%s is not dominant for type %s" % (what, text, family))
    return w


def _int_parts(w, what):
    if not w.is_integral():
        raise UnsupportedError("%s must have integer parts for this method" % what)
    return w.int_parts()


def _system(args):
    try:
        return RootSystem(args.family, args.rank)
    except ValueError as e:
        raise UsageError(str(e))


def cmd_kostka(args, out):
    sysn = _system(args)
    lam = _weight(args.__dict__["lambda"], args.rank, args.family, "lambda")
    mu = _weight(args.mu, args.rank, args.family, "mu")
    warning = None
    if args.method == "def":
        poly = kostka_def(sysn, lam, mu)
    elif args.method == "morris":
        poly = morris_kostka(args.family, args.rank, _int_parts(lam, "lambda"), _int_parts(mu, "mu"))
    elif args.method == "statistic":
        lp, mp = _int_parts(lam, "lambda"), _int_parts(mu, "mu")
        if args.family not in ("B", "C", "D") or (args.family == "D" and args.rank < 3):
            raise UnsupportedError("statistic needs type B, C or type D with rank >= 3")
        if lp[-1] < 0:
            raise UnsupportedError("statistic needs a nonnegative last part")
        poly, valid = kostka_statistic(args.family, args.rank, lp, mp)
        if not valid:
            warning = "WARNING: Proposition 3.6 hypotheses not satisfied"
    else:
        poly = _closed(args.family, args.rank, lam, mu)
    if args.json:
        obj = {"family": args.family, "rank": args.rank, "lambda": str(lam), "mu": str(mu),
               "method": args.method, "polynomial": poly.to_json()}
        if warning:
            obj["warning"] = warning
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        out.write(str(poly) + "\n")
        if warning:
            out.write(warning + "\n")
    return EXIT_OK


def _closed(family, n, lam, mu):
    lp, mp = _int_parts(lam, "lambda"), _int_parts(mu, "mu")
    if not any(mp) and n == 2 and family == "C":
        return k_c2_weight0(lp)
    if not any(mp) and n == 2 and family == "B":
        return k_b2_weight0(lp)
    if family == "A" and n == 3 and lp[2] == 0 and len(set(mp)) == 1:
        return k_a2_weight0(lp)
    e = small_matrix_entry(family, n, lp, mp)
    if e is None:
        raise UnsupportedError("no closed form for this input")
    return e


def cmd_tableaux(args, out):
    _system(args)
    if args.family not in ("A", "B", "C", "D"):
        raise UsageError("unknown family")
    lam = _int_parts(_weight(args.__dict__["lambda"], args.rank, args.family, "lambda"), "lambda")
    mu = _int_parts(_weight(args.mu, args.rank, args.family, "mu", dominant=False), "mu")
    ts = tableaux_of(args.family, args.rank, lam, mu)
    out.write("%d tableaux\n" % len(ts))
    for t in ts:
        out.write("\n")
        for row in t.rows():
            out.write("  " + " ".join("%3s" % (str(-x) + "̄" if x < 0 else str(x)) for x in row) + "\n")
        if args.chi or args.trace:
            value, trace = chi_trace(t)
            out.write("  chi = %d\n" % value)
            if args.trace:
                out.write("  trace: " + json.dumps(trace, sort_keys=True, ensure_ascii=False) + "\n")
    return EXIT_OK


def cmd_cyclage(args, out):
    _system(args)
    mu = _int_parts(_weight(args.mu, args.rank, args.family, "mu", dominant=False), "mu")
    ts = weight_tableaux(args.family, args.rank, mu, args.max_boxes)
    if args.json:
        out.write(cyclage_json(ts) + "\n")
    else:
        out.write(export_cyclage_graph(ts))
    return EXIT_OK


def cmd_validate(args, out):
    fams = tuple(f.strip() for f in args.families.split(",") if f.strip())
    for f in fams:
        if f not in ("B", "C", "D"):
            raise UsageError("families must be among B,C,D")
    rep = run(args.max_rank, args.max_boxes, fams, perturb=args.perturb)
    out.write("passed %d, failed %d\n" % (rep.passed, len(rep.failed)))
    for line in sorted(rep.failed)[:50]:
        out.write("FAIL " + line + "\n")
    return EXIT_FAIL if rep.failed else EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="kfpoly", description="Kostka-Foulkes polynomials of types A-D")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, lam=True):
        sp.add_argument("--family", required=True, choices=["A", "B", "C", "D"])
        sp.add_argument("--rank", required=True, type=int)
        if lam:
            sp.add_argument("--lambda", required=True, help="comma separated, n-bar part first")
        sp.add_argument("--mu", required=True)

    k = sub.add_parser("kostka", help="compute K_{lambda,mu}(q)")
    common(k)
    k.add_argument("--method", default="def", choices=["def", "morris", "statistic", "closed"])
    k.add_argument("--json", action="store_true")
    k.set_defaults(func=cmd_kostka)

    t = sub.add_parser("tableaux", help="list tableaux of shape lambda and weight mu")
    common(t)
    t.add_argument("--chi", action="store_true")
    t.add_argument("--trace", action="store_true")
    t.set_defaults(func=cmd_tableaux)

    c = sub.add_parser("cyclage", help="cyclage graph of a fixed weight")
    common(c, lam=False)
    c.add_argument("--max-boxes", type=int, default=3)
    g = c.add_mutually_exclusive_group()
    g.add_argument("--dot", action="store_true")
    g.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_cyclage)

    v = sub.add_parser("validate", help="run the cross-validation suite")
    v.add_argument("--max-rank", type=int, default=3)
    v.add_argument("--max-boxes", type=int, default=4)
    v.add_argument("--families", default="B,C,D")
    v.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_validate)
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.func(args, out)
    except UsageError as e:
        sys.stderr.write("error: %s\n" % e)
        return EXIT_USAGE
    except UnsupportedError as e:
        sys.stderr.write("unsupported: %s\n" % e)
        return EXIT_UNSUPPORTED
    except CapExceeded as e:
        sys.stderr.write("cap exceeded: %s\n" % e)
        return EXIT_CAP


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
