"""Command-line front end.

Subcommands:

    pair        exact pairing of a named test curve with a named divisor
    class       print a named divisor class (opaque coefficients as `?`)
    lattice     Gram matrices and lattice check batteries
    schubert    degrees of Schubert-class expressions in G(2, n)
    complex     second-compound / tangency / singularity / rank queries
    verify-all  the full check registry, as text or JSON

Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
errors.  All rationals print as lowest-terms `p/q` (the denominator is
omitted when it is 1); there is no decimal output.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import checks, curves, lattices, linecomplex, picard, schubert

_KINDS = {"mbar": picard.MBAR, "rbar": picard.RBAR, "spin": picard.SPIN}


def _build_curve(name: str, genus: int | None):
    if name == "xi":
        if genus is None:
            raise picard.BadParamError("--genus is required for the xi curve")
        return curves.xi_curve(genus)
    if name == "gamma":
        if genus is None:
            raise picard.BadParamError("--genus is required for gamma")
        return curves.gamma_curve(genus)
    if genus not in (None, 8):
        raise picard.BadParamError(f"the {name} curve lives in genus 8")
    if name == "r":
        return curves.r_curve_g8()
    if name == "septic":
        return curves.septic_pencil_curve()
    if name == "btilde":
        return curves.btilde_curve(curves.septic_pencil_curve())
    raise picard.BadParamError(f"unknown curve {name!r}")


def _divisor_for_curve(curve, name: str, param):
    """Resolve a divisor on the curve's space, pulling back a
    stable-curve class along the covering when that is the only fit."""
    g = curve.space.genus
    try:
        return picard.named_divisor(name, space=curve.space, param=param)
    except picard.BadParamError:
        d = picard.named_divisor(name, space=picard.mbar(g), param=param)
        if curve.space.kind == picard.SPIN:
            return picard.pullback_to_spin(d)
        if curve.space.kind == picard.RBAR:
            return picard.pullback_to_prym(d)
        raise


def _cmd_pair(args) -> int:
    curve = _build_curve(args.curve, args.genus)
    divisor = _divisor_for_curve(curve, args.divisor, args.param)
    print(curves.pair(curve, divisor))
    return 0


def _cmd_class(args) -> int:
    space = picard.ModuliSpace(_KINDS[args.space], args.genus)
    d = picard.named_divisor(args.name, space=space, param=args.param)
    print(picard.format_class(d))
    return 0


def _print_gram(lat) -> None:
    print(" ".join(lat.basis_names))
    for row in lat.gram:
        print(" ".join(str(x) for x in row))


def _cmd_lattice(args) -> int:
    genus = args.genus if args.genus is not None else 7
    if args.name == "nikulin":
        lat = lattices.nikulin_lattice()
    elif args.name == "lambda_g":
        lat = lattices.lambda_lattice(genus)
    elif args.name == "u":
        lat = lattices.hyperbolic_u()
    elif args.name == "e8":
        lat = lattices.e8(args.scale if args.scale is not None else 1)
    else:
        raise picard.BadParamError(f"unknown lattice {args.name!r}")
    _print_gram(lat)
    if not args.check:
        return 0
    ok = True
    if args.check == "identities":
        for name, got, want in lattices.lambda_identities(genus):
            good = got == want
            ok = ok and good
            print(f"{name}: {got} (expected {want})"
                  + ("" if good else "  <- FAIL"))
    elif args.check == "cs":
        cert = lattices.cs_obstruction(genus, a_bound=5)
        for e in cert.entries:
            print(f"a={e.a}: sum={e.target_sum} norm={e.target_norm} "
                  f"gap={e.cs_gap} solutions="
                  f"{'found' if e.solution_found else 'none'}")
        ok = cert.holds
    elif args.check == "doubly-elliptic":
        r = lattices.doubly_elliptic_identities()
        print(f"(2E+sum G_i)^2 = {r.section_square}")
        print(f"(C1+C2)^2 = {r.pencil_sum_square}")
        print(f"C.G_i = {list(r.section_dot_exceptional)}")
        ok = r.holds
    print("ok" if ok else "FAILED")
    return 0 if ok else 1


_INT_FACTOR = re.compile(r"^-?\d+$")
_TWOROW_FACTOR = re.compile(r"^s\((\d+)(?:,(\d+))?\)(?:\^(\d+))?$")
_SPECIAL_FACTOR = re.compile(r"^s(\d+)(?:\^(\d+))?$")


def parse_schubert_expr(n: int, expr: str) -> schubert.SchubertCycle:
    """Parse products like "4*s(2,1)*s1^3" into a cycle in G(2, n)."""
    result = schubert.sigma(n, 0, 0)
    for raw in expr.split("*"):
        token = raw.strip()
        if not token:
            raise picard.BadParamError("empty factor in expression")
        if _INT_FACTOR.match(token):
            result = result * int(token)
            continue
        m = _TWOROW_FACTOR.match(token)
        if m:
            a, b = int(m.group(1)), int(m.group(2) or 0)
            power = int(m.group(3) or 1)
        else:
            m = _SPECIAL_FACTOR.match(token)
            if not m:
                raise picard.BadParamError(f"cannot parse factor {token!r}")
            a, b = int(m.group(1)), 0
            power = int(m.group(2) or 1)
        for _ in range(power):
            result = schubert.multiply(result, schubert.sigma(n, a, b))
    return result


def _cmd_schubert(args) -> int:
    cycle = parse_schubert_expr(args.n, args.expr)
    if args.degree:
        print(schubert.degree(cycle))
    else:
        print(cycle)
    return 0


def _read_complex_file(path: str):
    with open(path, encoding="utf-8") as handle:
        lines = [ln.strip() for ln in handle
                 if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise picard.BadParamError("empty input file")
    dim = int(lines[0])
    rows = [[Fraction(tok) for tok in ln.split()] for ln in lines[1:]]
    return dim, rows


def _cmd_complex(args) -> int:
    dim, rows = _read_complex_file(args.input)
    if args.op == "plucker-rank":
        if len(rows) < 1 or len(rows[0]) != len(linecomplex.wedge_pairs(dim)):
            raise picard.BadParamError(
                "plucker-rank input: dimension line, then one line of "
                "C(dim,2) wedge coefficients in lexicographic order")
        psi = {p: c for p, c in zip(linecomplex.wedge_pairs(dim), rows[0])
               if c}
        print(linecomplex.plucker_quadric_rank(psi, dim_v=dim))
        return 0
    if len(rows) < dim:
        raise picard.BadParamError(f"expected {dim} matrix rows")
    q = linecomplex.symmetric_form(rows[:dim])
    vectors = rows[dim:]
    if args.op == "compound":
        c = linecomplex.second_compound(q)
        for row in c.gram:
            print(" ".join(str(x) for x in row))
        print(f"rank: {c.rank()}")
        return 0
    if len(vectors) < 2:
        raise picard.BadParamError("tangency/singular input needs two "
                                   "vector lines after the matrix")
    u, v = vectors[0], vectors[1]
    if args.op == "tangency":
        print("true" if linecomplex.tangency(q, u, v) else "false")
    else:
        print("true" if linecomplex.is_singular_point(q, u, v) else "false")
    return 0


def _cmd_verify_all(args) -> int:
    report = checks.verify_all(seed=args.seed)
    if args.json:
        print(checks.render_json(report))
    else:
        print(checks.render_text(report))
    return 0 if report.all_passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spincalc",
        description="exact moduli intersection numbers, lattice identities "
                    "and Grassmannian degrees")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pair", help="pair a test curve with a divisor")
    p.add_argument("--curve", required=True,
                   choices=["xi", "gamma", "r", "septic", "btilde"])
    p.add_argument("--genus", type=int)
    p.add_argument("--divisor", required=True)
    p.add_argument("--param", type=int)
    p.set_defaults(fn=_cmd_pair)

    p = sub.add_parser("class", help="print a named divisor class")
    p.add_argument("--space", required=True, choices=sorted(_KINDS))
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--name", required=True)
    p.add_argument("--param", type=int)
    p.set_defaults(fn=_cmd_class)

    p = sub.add_parser("lattice", help="Gram matrices and lattice checks")
    p.add_argument("--name", required=True,
                   choices=["nikulin", "lambda_g", "u", "e8"])
    p.add_argument("--genus", type=int)
    p.add_argument("--scale", type=int)
    p.add_argument("--check",
                   choices=["identities", "cs", "doubly-elliptic"])
    p.set_defaults(fn=_cmd_lattice)

    p = sub.add_parser("schubert", help="Schubert-class expressions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--expr", required=True)
    p.add_argument("--degree", action="store_true")
    p.set_defaults(fn=_cmd_schubert)

    p = sub.add_parser("complex", help="quadratic line-complex queries")
    p.add_argument("--op", required=True,
                   choices=["compound", "tangency", "singular",
                            "plucker-rank"])
    p.add_argument("--input", required=True)
    p.set_defaults(fn=_cmd_complex)

    p = sub.add_parser("verify-all", help="run the full check registry")
    p.add_argument("--json", action="store_true")
    p.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    p.set_defaults(fn=_cmd_verify_all)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
