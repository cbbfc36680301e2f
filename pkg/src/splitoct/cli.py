"""Command-line front end.

Exit codes: 0 success, 1 domain or verification failure, 2 parse or usage error.
The default prime comes from $SPLITOCT_PRIME (default 5) and can be
overridden with --p.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
import time
from fractions import Fraction

from . import apartment as ap
from . import chevalley as ch
from . import derivations as dv
from . import lattices as lt
from .automorphisms import ALL_LABELS, RootGen, RootLabel, h_alpha, to_matrix
from .core_arith import ConfigError, MultiPoly, check_prime, default_prime, format_rational, parse_rational
from .octonion import bilin, conj, format_octonion, mult, norm, parse_octonion, trace

EXIT_OK, EXIT_FAIL, EXIT_PARSE = 0, 1, 2


class ParseFailure(Exception):
    pass


def _emit(args, payload, text: str):
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _parse(fn, text):
    try:
        return fn(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseFailure(str(exc)) from exc


def _fn_by_name(name: str) -> lt.IntermediateFn:
    fns = lt.standard_intermediate_fns()
    if name not in fns:
        raise ParseFailure(f"unknown intermediate function {name!r}; choose from {', '.join(fns)}")
    return fns[name]


# commands

def cmd_tables(args) -> int:
    if args.pair:
        try:
            a, b = (RootLabel.parse(x) for x in args.pair)
        except ValueError as exc:
            raise ParseFailure(str(exc)) from exc
        spec = ch.CommutatorSpec(a, b)
        try:
            table = {spec: ch.extract_constants(spec)}
        except ch.VacuousPair as exc:
            print(f"vacuous pair: {exc}", file=sys.stderr)
            return EXIT_FAIL
        expected = ch.load_expected().get((str(a), str(b)))
        problems = [] if expected is None or expected == [e.to_json() for e in table[spec]] else [
            f"{a} {b}: expected {expected}"
        ]
    else:
        start = time.perf_counter()
        table = ch.emit_all_tables(workers=args.workers)
        problems = ch.compare_with_expected(table)
        if args.format == "text":
            print(f"# {len(table)} pairs in {time.perf_counter() - start:.1f}s", file=sys.stderr)
    _emit(args, ch.table_json(table), ch.render_tables(table))
    for p in problems:
        print(f"MISMATCH {p}", file=sys.stderr)
    return EXIT_FAIL if problems else EXIT_OK


def cmd_mult(args) -> int:
    x, y = _parse(parse_octonion, args.x), _parse(parse_octonion, args.y)
    z = mult(x, y)
    _emit(args, [format_rational(c) for c in z.coords], format_octonion(z))
    return EXIT_OK


def cmd_norm(args) -> int:
    x = _parse(parse_octonion, args.x)
    payload = {"norm": format_rational(norm(x)), "trace": format_rational(trace(x)),
               "conj": [format_rational(c) for c in conj(x).coords]}
    _emit(args, payload, format_rational(norm(x)))
    return EXIT_OK


def cmd_val(args) -> int:
    x = _parse(parse_octonion, args.x)
    v = _fn_by_name(args.fn)
    out = format_rational(lt.valuation_of(x, v, args.p))
    _emit(args, {"fn": args.fn, "p": args.p, "val": out}, out)
    return EXIT_OK


def cmd_dual(args) -> int:
    lat = _parse(lt.parse_lattice, args.lattice)
    d = lt.dual(lat)
    _emit(args, {"lattice": str(lat), "dual": str(d)}, str(d))
    return EXIT_OK


def cmd_classify(args) -> int:
    lat = _parse(lt.parse_lattice, args.lattice)
    c = lt.classify_vertex_order(lat)
    payload = {"lattice": str(lat), "type": c.kind, "M": None if c.M is None else str(c.M)}
    _emit(args, payload, str(c))
    return EXIT_OK if c.kind != "none" else EXIT_FAIL


def cmd_sequence(args) -> int:
    v = _fn_by_name(args.fn)
    rs = [_parse(parse_rational, r) for r in args.at] if args.at else lt.jumps(v) + [Fraction(1)]
    rows = [(r, lt.lattice_at(v, r)) for r in rs]
    payload = {
        "fn": args.fn,
        "jumps": [format_rational(r) for r in lt.jumps(v)],
        "lattices": [{"r": format_rational(r), "lattice": str(l)} for r, l in rows],
    }
    text = "jumps: " + " ".join(format_rational(r) for r in lt.jumps(v)) + "\n" + "\n".join(
        f"r = {format_rational(r):>4}  {l}" for r, l in rows
    )
    _emit(args, payload, text)
    return EXIT_OK


def _vertex_rows(points):
    rows = []
    for pt, kind in points:
        order = lt.order_at_point(pt)
        rows.append({
            "x": format_rational(pt.x),
            "y": format_rational(pt.y),
            "type": kind,
            "order": lt.label_name(order),
        })
    return sorted(rows, key=lambda r: (r["type"], Fraction(r["x"]), Fraction(r["y"])))


def nearest_vertices() -> list:
    """For each vertex type, the vertices closest to the origin.

    Distance is the Weyl-invariant square sum of the torus exponents.
    """
    pts = ap.special_points(-2, -3, 2, 3)
    out = []
    for kind in ("type1", "type2", "type3"):
        cands = [p for p, k in pts if k == kind and p != ap.ApartmentPoint(0, 0)]
        dist = {p: sum(c * c for c in ap.cocharacter(p)) for p in cands}
        best = min(dist.values())
        out.extend((p, kind) for p in cands if dist[p] == best)
    return [(ap.ApartmentPoint(0, 0), "type1")] + out


def _svg(rows, box) -> str:
    import math

    x0, y0, x1, y1 = (float(b) for b in box)

    def plane(x, y):
        e1, e2, e3 = 2 * x - y, -x + y, -x
        return (e1 - e2) / math.sqrt(2), (e1 + e2 - 2 * e3) / math.sqrt(6)

    corners = [plane(a, b) for a in (x0, x1) for b in (y0, y1)]
    px0, px1 = min(c[0] for c in corners), max(c[0] for c in corners)
    py0, py1 = min(c[1] for c in corners), max(c[1] for c in corners)
    s = 120.0
    w, h = (px1 - px0) * s + 40, (py1 - py0) * s + 40

    def tx(p):
        return (p[0] - px0) * s + 20, (py1 - p[1]) * s + 20

    lines = []
    for alpha in ap.POSITIVE_ROOTS:
        span = int(max(abs(float(ap.pair_point(alpha, ap.ApartmentPoint(Fraction(a), Fraction(b)))))
                       for a in (x0, x1) for b in (y0, y1))) + 1
        for n in range(-span, span + 1):
            # two points on <alpha, x> = n in coroot coordinates
            a1, a2 = 2 * alpha.m - 3 * alpha.n, -alpha.m + 2 * alpha.n
            if a2 != 0:
                pts = [(x, (n - a1 * x) / a2) for x in (x0 - 10, x1 + 10)]
            else:
                pts = [(n / a1, y) for y in (y0 - 10, y1 + 10)]
            (u1, v1), (u2, v2) = (tx(plane(*p)) for p in pts)
            lines.append(f'<line x1="{u1:.2f}" y1="{v1:.2f}" x2="{u2:.2f}" y2="{v2:.2f}" stroke="#bbb" stroke-width="0.6"/>')
    colors = {"type1": "#f5e663", "type2": "#f08080", "type3": "#7f9cf5"}
    dots = []
    for r in rows:
        u, v = tx(plane(float(Fraction(r["x"])), float(Fraction(r["y"]))))
        dots.append(
            f'<circle cx="{u:.2f}" cy="{v:.2f}" r="4" fill="{colors[r["type"]]}" stroke="black">'
            f'<title>{r["type"]} {r["order"]}</title></circle>'
        )
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0f}" height="{h:.0f}">'
        f'<clipPath id="c"><rect x="0" y="0" width="{w:.0f}" height="{h:.0f}"/></clipPath>'
        f'<g clip-path="url(#c)">{"".join(lines)}{"".join(dots)}</g></svg>\n'
    )


def cmd_apartment(args) -> int:
    if args.nearest:
        pts = nearest_vertices()
        box = (-1, -2, 1, 2)
    else:
        box = tuple(_parse(parse_rational, b) for b in args.region)
        pts = ap.special_points(*box)
    rows = _vertex_rows(pts)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(_svg(rows, box))
    text = "\n".join(f"{r['type']:<6} ({r['x']}, {r['y']})  {r['order']}" for r in rows)
    _emit(args, rows, text)
    return EXIT_OK


def derivations_report() -> dict:
    basis = dv.derivation_nullspace()
    t = MultiPoly.var("t")
    exp_match = {str(lab): dv.exp_nilpotent(dv.E_root(lab), t) == to_matrix(RootGen(lab, t)) for lab in ALL_LABELS}
    nil = dv.nilpotency_report(basis)
    axioms = dv.chevalley_basis_check()
    return {
        "dimension": basis.dimension,
        "exp_match": exp_match,
        "nilpotency": nil,
        "axioms": {k: axioms[k] for k in ("a", "b", "c", "d", "e")},
        "axiom_failures": axioms["failures"],
        "axiom_e_signs": axioms["e_signs"],
        "literal_readings": axioms["literal_readings"],
    }


def cmd_derivations(args) -> int:
    rep = derivations_report()
    print(json.dumps(rep, indent=2))
    return EXIT_OK if _derivations_ok(rep) else EXIT_FAIL


def _derivations_ok(rep) -> bool:
    return (
        rep["dimension"] == 14
        and all(rep["exp_match"].values())
        and all(r["derivation"] and r["square_zero"] and r["ad_cube_zero"] for r in rep["nilpotency"])
        and all(rep["axioms"].values())
    )


# verification suites

def suite_relations(rng: random.Random) -> list[tuple[str, bool]]:
    s, t = MultiPoly.var("s"), MultiPoly.var("t")
    from .automorphisms import AutWord, generic_octonion

    x = generic_octonion()
    out = []
    for lab in ALL_LABELS:
        lhs = AutWord((RootGen(lab, s), RootGen(lab, t))).apply(x)
        out.append((f"(a) additivity {lab}", lhs == RootGen(lab, s + t).apply(x)))
    for lab in ALL_LABELS:
        lhs = (h_alpha(lab, t) + h_alpha(lab, s)).apply(x)
        out.append((f"(c) h multiplicative {lab}", lhs == h_alpha(lab, s * t).apply(x)))
    return out


def suite_derivations(rng: random.Random) -> list[tuple[str, bool]]:
    rep = derivations_report()
    out = [("dimension 14", rep["dimension"] == 14)]
    out += [(f"exp match {k}", v) for k, v in rep["exp_match"].items()]
    for r in rep["nilpotency"]:
        out.append((f"derivation {r['label']}", r["derivation"]))
        out.append((f"E^2 = 0 {r['label']}", r["square_zero"]))
        out.append((f"ad(E)^3 = 0 {r['label']}", r["ad_cube_zero"]))
    out += [(f"axiom ({k})", v) for k, v in rep["axioms"].items()]
    return out


def suite_lattices(rng: random.Random, p: int) -> list[tuple[str, bool]]:
    L = lt.parse_lattice
    out = [
        ("dual L[1 0 0; 0 1 0]", lt.dual(L("L[1 0 0; 0 1 0]")) == L("L[0 -1 0; -1 0 0]")),
        ("dual L[1 0 1; 0 1 0]", lt.dual(L("L[1 0 1; 0 1 0]")) == L("L[0 -1 0; -1 0 -1]")),
    ]
    for lat in lt.NEAREST_TYPE1:
        out.append((f"type1 {lat}", lt.classify_vertex_order(lat).kind == "type1_maximal"))
    for lat in lt.NEAREST_TYPE2:
        out.append((f"type2 {lat}", lt.classify_vertex_order(lat).kind == "type2"))
    for lat in lt.NEAREST_TYPE3:
        out.append((f"type3 {lat}", lt.classify_vertex_order(lat).kind == "type3"))
    fns = list(lt.standard_intermediate_fns().values())
    for _ in range(100):
        fns.append(lt.IntermediateFn(tuple(Fraction(rng.randint(-12, 12), rng.randint(1, 6)) for _ in range(8))))
    rt = all(lt.fn_from_sequence(lt.sequence_of(v)) == v for v in fns)
    out.append(("valuation round trip", rt))
    inv = True
    for _ in range(1000):
        lat = lt.ExponentLattice(tuple(rng.randint(-4, 4) for _ in range(8)))
        inv &= lt.dual(lt.dual(lat)) == lat
    out.append(("dual involution", inv))
    return out


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    suites = ["relations", "derivations", "lattices"] if args.suite == "all" else [args.suite]
    results = []
    for name in suites:
        if name == "relations":
            results += [("relations", *r) for r in suite_relations(rng)]
        elif name == "derivations":
            results += [("derivations", *r) for r in suite_derivations(rng)]
        else:
            results += [("lattices", *r) for r in suite_lattices(rng, args.p)]
    failed = [r for r in results if not r[2]]
    payload = {"seed": args.seed, "passed": len(results) - len(failed), "failed": [f"{s}: {n}" for s, n, _ in failed]}
    text = "\n".join(f"{'PASS' if ok else 'FAIL'} [{s}] {n}" for s, n, ok in results)
    text += f"\n{len(results) - len(failed)}/{len(results)} passed"
    _emit(args, payload, text)
    return EXIT_FAIL if failed else EXIT_OK


_NEGATIVE_RATIONAL = re.compile(r"^-\d+(/\d+)?$")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="splitoct", description="Split octonions, G2 and octonion orders.")
    parser.add_argument("--p", type=int, default=None, help="odd prime (default $SPLITOCT_PRIME or 5)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tables", help="recompute and check the commutator constants")
    t.add_argument("--pair", nargs=2, metavar=("ALPHA", "BETA"))
    t.add_argument("--json", action="store_const", const="json", dest="format")
    t.add_argument("--workers", type=int, default=1)
    t.set_defaults(func=cmd_tables)

    m = sub.add_parser("mult", help="multiply two octonions")
    m.add_argument("x")
    m.add_argument("y")
    m.set_defaults(func=cmd_mult)

    n = sub.add_parser("norm", help="norm of an octonion")
    n.add_argument("x")
    n.set_defaults(func=cmd_norm)

    v = sub.add_parser("val", help="valuation of an octonion")
    v.add_argument("x")
    v.add_argument("--fn", default="standard")
    v.set_defaults(func=cmd_val)

    d = sub.add_parser("dual", help="dual of an exponent lattice")
    d.add_argument("lattice")
    d.set_defaults(func=cmd_dual)

    c = sub.add_parser("classify", help="vertex type of an order")
    c.add_argument("lattice")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("sequence", help="lattice sequence of an intermediate function")
    s.add_argument("--fn", required=True)
    s.add_argument("--at", nargs="*")
    s.set_defaults(func=cmd_sequence)

    vf = sub.add_parser("verify", help="run property suites")
    vf.add_argument("--suite", choices=("relations", "derivations", "lattices", "all"), default="all")
    vf.add_argument("--seed", type=int, default=0)
    vf.set_defaults(func=cmd_verify)

    a = sub.add_parser("apartment", help="vertices of the standard apartment")
    g = a.add_mutually_exclusive_group(required=True)
    g.add_argument("--region", nargs=4, metavar=("X0", "Y0", "X1", "Y1"))
    g.add_argument("--nearest", action="store_true", help="the vertices of each type nearest the origin")
    a.add_argument("--svg")
    a.set_defaults(func=cmd_apartment)

    dr = sub.add_parser("derivations", help="derivation algebra report (JSON)")
    dr.set_defaults(func=cmd_derivations)

    # let "-1/2" through as a value rather than an option
    for p in (parser, *sub.choices.values()):
        p._negative_number_matcher = _NEGATIVE_RATIONAL
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.p = default_prime() if args.p is None else check_prime(args.p)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
