"""Command line: solve, census, param, verify.

Field elements are integers: v encodes sum c_i t^i where c_0, c_1, ... are
the base-p digits of v, least significant first.  --poly takes the
defining polynomial's coefficients lowest degree first, leading 1 included
(e.g. "1,1,0,1" is X^3 + X + 1).

Exit codes: 0 ok, 1 verification mismatch, 2 invalid parameters,
3 field too large.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import __version__
from .gf import FieldTooLarge, make_field, poly_str
from .oracle import census, verify
from .sequence import Instance, eval_F
from .solver import excluded_degree, parametrize_a, solve


def _params(p, n, k, ctx):
    d = math.gcd(n, k)
    return {
        "p": p,
        "n": n,
        "k": k,
        "d": d,
        "m": n // d,
        "q": p**k,
        "Q": p**n,
        "poly": list(ctx.f),
        "poly_str": poly_str(ctx.f),
    }


def _enc(v):
    return int(v) if hasattr(v, "ctx") else v


def _emit(doc, fmt, out):
    if fmt == "json":
        out.write(json.dumps(doc, sort_keys=True) + "\n")
        return
    for key in sorted(doc):
        val = doc[key]
        if isinstance(val, dict):
            out.write(f"{key}:\n")
            for sub in sorted(val):
                out.write(f"  {sub}: {val[sub]}\n")
        else:
            out.write(f"{key}: {val}\n")


def _field(args):
    poly = None
    if args.poly:
        poly = [int(c) for c in args.poly.split(",")]
    return make_field(args.p, args.n, poly)


def _element(ctx, v, name):
    if not 0 <= v < ctx.order:
        raise ValueError(f"--{name} {v} out of range [0, {ctx.order})")
    return ctx(v)


def cmd_solve(args, out):
    C = _field(args)
    inst = Instance(args.p, args.n, args.k, _element(C, args.a, "a"))
    sol = solve(inst)
    params = _params(args.p, args.n, args.k, C)
    params["a"] = args.a
    doc = {
        "params": params,
        "case": sol.case,
        "count": sol.count,
        "roots": [int(x) for x in sol.roots],
        "diagnostics": {k: _enc(v) for k, v in sol.diagnostics.items()},
        "version": __version__,
    }
    _emit(doc, args.format, out)
    return 0


def cmd_census(args, out):
    C = _field(args)
    rows = census(args.p, args.k, args.n, C.f)
    doc = {
        "params": _params(args.p, args.n, args.k, C),
        "rows": [{"i": r.i, "M": r.M} for r in rows],
        "total": sum(r.M for r in rows),
        "version": __version__,
    }
    status = 0
    if args.verify:
        agree = bad = 0
        for a in C.elements(1):
            if verify(Instance(args.p, args.n, args.k, a)).match:
                agree += 1
            else:
                bad += 1
        doc["verification"] = {"agreements": agree, "mismatches": bad}
        status = 1 if bad else 0
    if args.format == "text":
        out.write(f"GF({args.p}^{args.n}), q = {args.p}^{args.k}, f = {poly_str(C.f)}\n")
        for r in rows:
            out.write(f"  i={r.i:<4d} M_i={r.M}\n")
        out.write(f"  total={doc['total']}\n")
        if args.verify:
            v = doc["verification"]
            out.write(f"agreements: {v['agreements']}, mismatches: {v['mismatches']}\n")
    else:
        _emit(doc, "json", out)
    return status


def cmd_param(args, out):
    C = _field(args)
    u = _element(C, args.u, "u")
    a, roots = parametrize_a(args.p, args.n, args.k, u)
    doc = {
        "params": _params(args.p, args.n, args.k, C),
        "u": args.u,
        "excluded_subfield_degree": excluded_degree(args.p, args.n, args.k),
        "a": int(a),
        "F_a_is_zero": not eval_F(Instance(args.p, args.n, args.k, a)),
        "roots": sorted(int(x) for x in roots),
        "count": len(set(roots)),
        "version": __version__,
    }
    _emit(doc, args.format, out)
    return 0


def cmd_verify(args, out):
    C = _field(args)
    rep = verify(Instance(args.p, args.n, args.k, _element(C, args.a, "a")))
    doc = rep.as_dict()
    doc["params"] = _params(args.p, args.n, args.k, C)
    doc["version"] = __version__
    _emit(doc, args.format, out)
    return 0 if rep.match else 1


def build_parser():
    ap = argparse.ArgumentParser(prog="bluher", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--poly", default=None, help="defining polynomial, low-to-high coefficients")
        sp.add_argument("--format", choices=["json", "text"], default="json")

    sp = sub.add_parser("solve", help="classify and list the roots in GF(p^n)")
    common(sp)
    sp.add_argument("--a", type=int, required=True)
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("census", help="exhaustive M_i table")
    common(sp)
    sp.add_argument("--verify", action="store_true", help="also check solver against oracle for every a")
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("param", help="a(u) and its p^d+1 roots")
    common(sp)
    sp.add_argument("--u", type=int, required=True)
    sp.set_defaults(func=cmd_param)

    sp = sub.add_parser("verify", help="solver vs brute force for one a")
    common(sp)
    sp.add_argument("--a", type=int, required=True)
    sp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    if args.p < 2 or args.n < 1 or args.k < 1:
        print("error: need p >= 2, n >= 1, k >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args, out)
    except FieldTooLarge as exc:
        print(f"error: field too large: {exc}", file=sys.stderr)
        return 3
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
