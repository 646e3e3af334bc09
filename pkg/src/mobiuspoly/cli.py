"""Command-line interface.

    mobiuspoly build cube 3 -o cube.json
    mobiuspoly transform prism square.json -o cube.json
    mobiuspoly compute mobius cube.json
    mobiuspoly verify all

Exit status: 0 success, 1 a verification mismatch, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closed_forms as cf
from . import constructions, interchange, verify
from .mobius import bottom_polynomial, mobius_polynomial, r_polynomial, top_polynomial
from .polynomial import IntPolynomial
from .poset import (
    PosetError,
    adjoin_top,
    collapse_top,
    direct_product,
    dual,
    interval,
    nij_table,
    restrict,
)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

BUILDERS = {
    "simplex": constructions.simplex,
    "cube": constructions.hypercube,
    "polygon": constructions.polygon,
    "crosspolytope": constructions.cross_polytope,
    "boolean": constructions.boolean_lattice,
}

TRANSFORMS = ("pyramid", "prism", "dual", "product", "glue", "adjoin-top", "collapse-top", "restrict")
THEOREMS = ("pyramid", "prism", "glue", "simplicial", "near-simplicial", "rank3", "general")


class UsageError(Exception):
    pass


def parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise UsageError(f"bad vertex list {text!r}; use e.g. \"0 1 2 3\" or \"0,1,2,3\"") from None


def parse_map(text: str) -> dict[int, int]:
    out = {}
    for item in filter(None, (t.strip() for t in text.split(","))):
        try:
            a, b = item.split(":")
            out[int(a)] = int(b)
        except ValueError:
            raise UsageError(f"bad map entry {item!r}; use a:b pairs separated by commas") from None
    return out


def parse_given(text: str) -> dict[tuple[int, int], int]:
    """``"0,2=96;1,3=40"`` -> ``{(0, 2): 96, (1, 3): 40}``."""
    out = {}
    for item in filter(None, (t.strip() for t in text.split(";"))):
        try:
            key, value = item.split("=")
            i, j = key.split(",")
            out[int(i), int(j)] = int(value)
        except ValueError:
            raise UsageError(f"bad --given entry {item!r}; use i,j=count separated by semicolons") from None
    return out


def emit_poset(P, out_path, summary: str):
    if out_path:
        interchange.write(P, out_path)
        print(summary)
        print(f"wrote {len(P)} elements to {out_path}")
    else:
        sys.stdout.write(interchange.dumps(P))
        print(summary, file=sys.stderr)


def print_poly(p: IntPolynomial, label: str | None = None):
    print(f"{label}: {p.render()}" if label else p.render())
    print(json.dumps(list(p.coeffs), separators=(",", ":")))


# -- subcommands -----------------------------------------------------------


def cmd_build(args):
    P = BUILDERS[args.name](args.param)
    emit_poset(P, args.out, f"{args.name}({args.param}): f = {P.f_vector()}")
    return EXIT_OK


def cmd_transform(args):
    inputs = [interchange.read(p) for p in args.inputs]
    needs = {"product": 2, "glue": 2}.get(args.op, 1)
    if len(inputs) != needs:
        raise UsageError(f"transform {args.op} takes {needs} input file(s), got {len(inputs)}")
    P = inputs[0]
    if args.op == "pyramid":
        R = constructions.pyramid(P)
    elif args.op == "prism":
        R = constructions.prism(P)
    elif args.op == "dual":
        R = dual(P)
    elif args.op == "product":
        R = direct_product(P, inputs[1])
    elif args.op == "adjoin-top":
        R = adjoin_top(P)
    elif args.op == "collapse-top":
        R = collapse_top(P)
    elif args.op == "restrict":
        lo = P.min_rank if args.lo is None else args.lo
        hi = P.max_rank if args.hi is None else args.hi
        R = restrict(P, lo, hi)
    else:
        if not args.facet_p or not args.facet_q:
            raise UsageError("glue needs --facet-p and --facet-q")
        vmap = parse_map(args.map) if args.map else None
        R = constructions.glue_by_vertices(
            P, inputs[1], parse_vertex_list(args.facet_p), parse_vertex_list(args.facet_q), vmap
        )
    ins = " , ".join(str(X.f_vector()) for X in inputs)
    emit_poset(R, args.out, f"{args.op}: f in {ins} -> f out {R.f_vector()}")
    return EXIT_OK


def _glue_inputs(args, P):
    if not args.with_ or not args.facet_p or not args.facet_q:
        raise UsageError("--theorem glue needs --with, --facet-p and --facet-q")
    Q = interchange.read(args.with_)
    fp = P.find_face(parse_vertex_list(args.facet_p))
    fq = Q.find_face(parse_vertex_list(args.facet_q))
    if P.ranks[fp] != P.max_rank - 1 or Q.ranks[fq] != Q.max_rank - 1 or P.max_rank != Q.max_rank:
        raise cf.HypothesisError("gluing theorem: both faces must be facets of polytopes of equal dimension")
    return Q, fp


def closed_form(args, P) -> IntPolynomial:
    theorem = args.theorem
    fv = P.f_vector()
    if theorem == "pyramid":
        return cf.pyramid_formula(mobius_polynomial(P))
    if theorem == "prism":
        P.require_polytopal("prism theorem")
        return cf.prism_formula(mobius_polynomial(P), bottom_polynomial(P), fv)
    if theorem == "glue":
        Q, fp = _glue_inputs(args, P)
        R = interval(P, P.bottom(), fp)
        return cf.glue_formula(mobius_polynomial(P), mobius_polynomial(Q), mobius_polynomial(R), top_polynomial(R))
    if theorem == "simplicial":
        if P.bottom() is None or not cf.is_simplicial(P):
            raise cf.HypothesisError("simplicial theorem: poset needs a unique minimum and boolean intervals")
        return cf.simplicial_formula(fv)
    if theorem == "near-simplicial":
        if not cf.is_near_simplicial(P):
            raise cf.HypothesisError("near-simplicial theorem: the poset without its top rank is not simplicial")
        return cf.near_simplicial_formula(fv, top_polynomial(P))
    if theorem == "rank3":
        return cf.eulerian_rank3_formula(fv)
    d = fv.top
    if args.given is not None:
        given = parse_given(args.given)
    else:
        table = nij_table(P)
        given = {k: table[k] for k in cf.free_indices(d)}
    return cf.eulerian_general_formula(fv, given)


def cmd_compute(args):
    P = interchange.read(args.input)
    if args.what == "mobius":
        print_poly(mobius_polynomial(P))
    elif args.what == "rpoly":
        r = P.max_rank if args.rank is None else args.rank
        print_poly(r_polynomial(P, r))
    elif args.what == "fvector":
        fv = P.f_vector()
        print(fv)
        print(json.dumps(list(fv.counts), separators=(",", ":")))
    elif args.what == "nij":
        table = nij_table(P)
        for (i, j), n in sorted(table.n.items()):
            print(f"N[{i},{j}] = {n}")
        print(json.dumps([[i, j, n] for (i, j), n in sorted(table.n.items())], separators=(",", ":")))
    elif args.what == "hilbert":
        h = cf.hilbert_series(mobius_polynomial(P))
        print(f"({h.num.render()}) / ({h.den.render()})")
        print(json.dumps(h.series_coeffs(args.terms), separators=(",", ":")))
    else:
        if not args.theorem:
            raise UsageError("compute closed-form needs --theorem")
        print_poly(closed_form(args, P))
    return EXIT_OK


def cmd_verify(args):
    checks = verify.run(args.suite)
    failed = [c for c in checks if not c.ok]
    if args.json:
        print(json.dumps({"suite": args.suite, "passed": len(checks) - len(failed), "failed": len(failed),
                          "checks": [c.to_dict() for c in checks]}, indent=1, ensure_ascii=False))
    else:
        for c in checks:
            print(c.line())
        print(f"{len(checks) - len(failed)} passed, {len(failed)} failed")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mobiuspoly", description="Möbius polynomials of polytope face lattices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a named face lattice")
    p.add_argument("name", choices=sorted(BUILDERS))
    p.add_argument("param", type=int)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("transform", help="apply a lattice operation")
    p.add_argument("op", choices=TRANSFORMS)
    p.add_argument("inputs", nargs="+")
    p.add_argument("-o", "--out")
    p.add_argument("--facet-p", help="glue: vertex list of the facet in the first input")
    p.add_argument("--facet-q", help="glue: vertex list of the facet in the second input")
    p.add_argument("--map", help="glue: vertex pairs p:q, comma separated")
    p.add_argument("--lo", type=int, help="restrict: lowest rank kept")
    p.add_argument("--hi", type=int, help="restrict: highest rank kept")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("compute", help="compute an invariant of a poset file")
    p.add_argument("what", choices=("mobius", "rpoly", "fvector", "nij", "hilbert", "closed-form"))
    p.add_argument("input")
    p.add_argument("--terms", type=int, default=10, help="hilbert: number of series terms")
    p.add_argument("--rank", type=int, help="rpoly: the cut rank (default: top)")
    p.add_argument("--theorem", choices=THEOREMS)
    p.add_argument("--with", dest="with_", help="glue theorem: second poset file")
    p.add_argument("--facet-p")
    p.add_argument("--facet-q")
    p.add_argument("--given", help='general theorem: free counts as "i,j=n;..." (default: read from input)')
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="run the differential verification suites")
    p.add_argument("suite", choices=(*verify.SUITES, "all"))
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, PosetError, cf.HypothesisError, OSError, OverflowError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
