"""Differential checks: every closed form against brute force, plus poset identities.

Each suite returns a list of :class:`Check` records in a fixed order.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass

from . import closed_forms as cf
from .constructions import boolean_lattice, chain2, hypercube, polygon, prism, pyramid, simplex, u_poset
from .corpus import all_lattices, base_lattices, gluings, prism_bases, pyramid_bases
from .mobius import (
    bottom_polynomial,
    eulerian_violations,
    face_top_bottom,
    mobius_at_one_report,
    mobius_polynomial,
    top_polynomial,
)
from .polynomial import IntPolynomial, convolve
from .poset import (
    GradedPoset,
    adjoin_top,
    are_isomorphic,
    bits,
    build_from_covers,
    collapse_top,
    direct_product,
    dual,
    induced,
    interval,
    nij_table,
    restrict,
)

SUITES = ("identities", "formulas", "counterexample")


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    expected: str = ""
    actual: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"[{status}] {self.suite}: {self.name}"
        if self.expected or self.actual:
            out += f"\n    expected: {self.expected}\n    actual:   {self.actual}"
        return out

    def to_dict(self) -> dict:
        return asdict(self)


def _poly_check(suite, name, expected: IntPolynomial, actual: IntPolynomial) -> Check:
    return Check(suite, name, expected == actual, expected.render(), actual.render())


def random_graded_poset(rng: random.Random, max_elements: int = 20) -> GradedPoset:
    """Random ranked poset: random level sizes, random covers between adjacent levels."""
    n = rng.randint(1, max_elements)
    levels = rng.randint(1, min(5, n))
    cuts = sorted(rng.sample(range(1, n), levels - 1)) if levels > 1 else []
    sizes = [b - a for a, b in zip([0, *cuts], [*cuts, n])]
    base = rng.choice([-1, 0])
    ranks, ids = [], []
    for level, size in enumerate(sizes):
        ids.append(list(range(len(ranks), len(ranks) + size)))
        ranks.extend([base + level] * size)
    covers = []
    for lower, upper in zip(ids, ids[1:]):
        density = rng.random()
        for a in lower:
            for b in upper:
                if rng.random() < density:
                    covers.append((a, b))
    return build_from_covers(ranks, covers)


def _small_factors() -> dict[str, GradedPoset]:
    return {"T_2": chain2(), "U": u_poset(), "triangle": simplex(2), "square": polygon(4)}


# -- identities --------------------------------------------------------------


def check_eulerian(suite="identities") -> list[Check]:
    out = []
    for name, P in all_lattices().items():
        bad = eulerian_violations(P)
        pairs = sum(1 for _ in P.comparable_pairs())
        out.append(
            Check(suite, f"mu = (-1)^gap on all {pairs} comparable pairs of {name}", not bad,
                  "no violations", f"{len(bad)} violations" + (f", first {bad[0]}" if bad else ""))
        )
    return out


def check_mobius_at_one(suite="identities", n_random: int = 100, seed: int = 20240917) -> list[Check]:
    out = []
    for name, P in all_lattices().items():
        for label, X in ((name, P), (f"dual({name})", dual(P))):
            value = mobius_polynomial(X)(1)
            out.append(Check(suite, f"M(1) = 1 for {label}", value == 1, "1", str(value)))
    rng = random.Random(seed)
    failures = []
    for k in range(n_random):
        P = random_graded_poset(rng)
        value, mu = mobius_at_one_report(P)
        if value != mu + 1:
            failures.append((k, value, mu))
    out.append(
        Check(suite, f"M(1) = mu[0,1] + 1 after adjoining bounds, {n_random} random posets (seed {seed})",
              not failures, "0 failures", f"{len(failures)} failures" + (f", first {failures[0]}" if failures else ""))
    )
    return out


def check_product_rule(suite="identities") -> list[Check]:
    out = []
    factors = _small_factors()
    for a, P in factors.items():
        for b, Q in factors.items():
            out.append(_poly_check(suite, f"M({a} x {b}) = M({a}) M({b})",
                                   mobius_polynomial(P) * mobius_polynomial(Q),
                                   mobius_polynomial(direct_product(P, Q))))
    return out


def check_isomorphisms(suite="identities") -> list[Check]:
    out = []
    T2, U = chain2(), u_poset()
    bases = {f"polygon({n})": polygon(n) for n in range(3, 7)}
    bases.update({f"hypercube({d})": hypercube(d) for d in (2, 3)})
    for name, P in bases.items():
        d = P.max_rank
        iso = are_isomorphic(pyramid(P), direct_product(P, T2))
        out.append(Check(suite, f"pyramid({name}) isomorphic to {name} x T_2", iso is not None))
        lhs = restrict(prism(P), 0, d + 1)
        rhs = direct_product(restrict(P, 0, d), U)
        iso = are_isomorphic(lhs, rhs)
        out.append(Check(suite, f"prism({name}) above rank 0 isomorphic to ({name} above rank 0) x U", iso is not None))
        Py = pyramid(P)
        apex = max(v for vs in Py.vertices for v in vs)
        lam = [a for a in range(len(Py)) if apex in Py.vertices[a]]
        lam_poset = induced(Py, lam)
        shifted = GradedPoset([r - 1 for r in lam_poset.ranks], lam_poset.up)
        out.append(Check(suite, f"apex faces of pyramid({name}) isomorphic to {name}",
                         are_isomorphic(shifted, P) is not None))
        Pr = prism(P)
        offset = max(v for vs in P.vertices for v in vs) + 1
        beta = [a for a in range(len(Pr))
                if any(v < offset for v in Pr.vertices[a]) and any(v >= offset for v in Pr.vertices[a])]
        beta_poset = induced(Pr, beta)
        shifted = GradedPoset([r - 1 for r in beta_poset.ranks], beta_poset.up)
        out.append(Check(suite, f"joining faces of prism({name}) isomorphic to {name} above rank 0",
                         are_isomorphic(shifted, restrict(P, 0, d)) is not None))
    return out


def check_zero_sums(suite="identities") -> list[Check]:
    out = []
    for name, P in all_lattices().items():
        if len(P) > 90:
            continue
        bad = 0
        for a in range(len(P)):
            for b in bits(P.up[a] & ~(1 << a)):
                inner = P.up[a] & P.down[b]
                if sum(P.mobius(a, s) for s in bits(inner)) or sum(P.mobius(s, b) for s in bits(inner)):
                    bad += 1
        out.append(Check(suite, f"Möbius sums vanish over every interval of {name}", bad == 0, "0", str(bad)))
    return out


def check_duality(suite="identities") -> list[Check]:
    out = []
    for name, P in base_lattices().items():
        D = dual(P)
        d = P.max_rank
        nP, nD = nij_table(P), nij_table(D)
        ok = all(nD[i, j] == nP[d - 1 - j, d - 1 - i] for (i, j) in nD.n)
        out.append(Check(suite, f"N table of dual({name}) is the reflected table", ok))
        out.append(_poly_check(suite, f"M(dual({name})) = M({name})", mobius_polynomial(P), mobius_polynomial(D)))
    return out


def check_top_bottom(suite="identities") -> list[Check]:
    out = []
    for name, P in all_lattices().items():
        top, bottom = face_top_bottom(P.f_vector())
        ok = top == top_polynomial(P) and bottom == bottom_polynomial(P)
        decomposition = mobius_polynomial(P) == bottom_polynomial(P) + mobius_polynomial(restrict(P, 0, P.max_rank)) \
            if P.max_rank >= 0 else True
        out.append(Check(suite, f"top/bottom polynomials of {name} match the f-vector forms", ok))
        out.append(Check(suite, f"M({name}) = bottom polynomial + M(ranks >= 0)", decomposition))
    return out


def identities() -> list[Check]:
    return (
        check_eulerian()
        + check_mobius_at_one()
        + check_product_rule()
        + check_isomorphisms()
        + check_zero_sums()
        + check_duality()
        + check_top_bottom()
    )


# -- formulas ----------------------------------------------------------------


def check_pyramid(suite="formulas") -> list[Check]:
    out = []
    for name, P in pyramid_bases().items():
        out.append(_poly_check(suite, f"pyramid theorem on {name}",
                               cf.pyramid_formula(mobius_polynomial(P)), mobius_polynomial(pyramid(P))))
    for d in range(0, 6):
        out.append(_poly_check(suite, f"simplex corollary d={d}", cf.simplex_formula(d), mobius_polynomial(simplex(d))))
    return out


def check_prism(suite="formulas") -> list[Check]:
    out = []
    for name, P in prism_bases().items():
        expected = cf.prism_formula(mobius_polynomial(P), bottom_polynomial(P), P.f_vector())
        out.append(_poly_check(suite, f"prism theorem on {name}", expected, mobius_polynomial(prism(P))))
    for d in range(0, 5):
        C = hypercube(d)
        out.append(_poly_check(suite, f"hypercube corollary d={d}", cf.hypercube_formula(d), mobius_polynomial(C)))
        out.append(_poly_check(suite, f"hypercube bottom polynomial d={d}", cf.hypercube_bottom(d), bottom_polynomial(C)))
    return out


def check_glue(suite="formulas") -> list[Check]:
    out = []
    for name, (P, Q, fp, fq, G) in gluings().items():
        R = interval(P, P.bottom(), fp)
        expected = cf.glue_formula(mobius_polynomial(P), mobius_polynomial(Q), mobius_polynomial(R), top_polynomial(R))
        out.append(_poly_check(suite, f"gluing theorem on {name}", expected, mobius_polynomial(G)))
    for name in ("polygon(4)", "polygon(5)", "hypercube(3)", "simplex(0)", "simplex(1)"):
        R = base_lattices()[name]
        m_r, g_top = mobius_polynomial(R), top_polynomial(R)
        out.append(_poly_check(suite, f"adjoined-top lemma on {name}", cf.hat_formula(m_r), mobius_polynomial(adjoin_top(R))))
        out.append(_poly_check(suite, f"collapsed-top lemma on {name}", cf.dot_formula(m_r, g_top),
                               mobius_polynomial(collapse_top(R))))
    return out


def check_rank3(suite="formulas") -> list[Check]:
    out = []
    for name, P in all_lattices().items():
        if P.max_rank == 3:
            out.append(_poly_check(suite, f"rank-3 formula on {name}", cf.eulerian_rank3_formula(P.f_vector()),
                                   mobius_polynomial(P)))
    return out


def check_general(suite="formulas") -> list[Check]:
    out = []
    for name, P in all_lattices().items():
        d = P.max_rank
        table = nij_table(P)
        given = {k: table[k] for k in cf.free_indices(d)}
        solved = cf.eulerian_solve_nij(P.f_vector(), given)
        out.append(Check(suite, f"interval counts of {name} recovered from f-vector and {len(given)} free values",
                         solved == table))
        out.append(_poly_check(suite, f"general Eulerian formula on {name}",
                               cf.eulerian_general_formula(P.f_vector(), given), mobius_polynomial(P)))
    return out


def check_simplicial(suite="formulas") -> list[Check]:
    out = []
    lattices = {f"boolean_lattice({n})": boolean_lattice(n) for n in range(1, 6)}
    lattices.update({f"simplex({d})": simplex(d) for d in range(0, 6)})
    for name, P in lattices.items():
        out.append(_poly_check(suite, f"simplicial theorem on {name}", cf.simplicial_formula(P.f_vector()),
                               mobius_polynomial(P)))
    for n in range(1, 6):
        out.append(_poly_check(suite, f"boolean top polynomial n={n}", cf.boolean_top_formula(n),
                               top_polynomial(boolean_lattice(n))))
    for d in range(1, 5):
        P = base_lattices()[f"cross_polytope({d})"]
        fv = P.f_vector()
        top, _ = face_top_bottom(fv)
        out.append(_poly_check(suite, f"near-simplicial theorem on cross_polytope({d})",
                               cf.near_simplicial_formula(fv, top), mobius_polynomial(P)))
        below = restrict(P, -1, P.max_rank - 1)
        out.append(_poly_check(suite, f"simplicial theorem on cross_polytope({d}) without its top",
                               cf.simplicial_formula(below.f_vector()), mobius_polynomial(below)))
    return out


def check_hilbert(suite="formulas", terms: int = 20) -> list[Check]:
    out = []
    series = cf.hilbert_series(mobius_polynomial(chain2())).series_coeffs(terms)
    out.append(Check(suite, f"Hilbert series of T_2 is all ones to {terms} terms", series == [1] * terms,
                     str([1] * terms), str(series)))
    for name, P in all_lattices().items():
        h = cf.hilbert_series(mobius_polynomial(P))
        s = h.series_coeffs(terms)
        ok = convolve(h.den.coeffs, s, terms) == [h.num[k] for k in range(terms)]
        out.append(Check(suite, f"Hilbert series of {name}: denominator x series = numerator to {terms} terms", ok))
    return out


def formulas() -> list[Check]:
    return (
        check_pyramid()
        + check_prism()
        + check_glue()
        + check_rank3()
        + check_general()
        + check_simplicial()
        + check_hilbert()
    )


# -- counterexample ------------------------------------------------------------

K_FVECTOR = (1, 18, 38, 22, 1)


def counterexample_polynomials():
    """f-vectors and Möbius polynomials of the two rank-4 examples.

    One side is the pyramid over a 3-polytope known only by its f-vector,
    computed with the rank-3 and pyramid formulas.  The other is the glued
    lattice, computed by brute force.
    """
    from .constructions import cube_with_pyramids
    from .poset import FVector

    kv = FVector(K_FVECTOR, -1)
    m_pyr = cf.pyramid_formula(cf.eulerian_rank3_formula(kv))
    fv_pyr = FVector(tuple(kv[r] + kv[r - 1] for r in range(-1, 5)), -1)
    Q = cube_with_pyramids(3)[-1]
    return fv_pyr, m_pyr, Q.f_vector(), mobius_polynomial(Q)


def counterexample() -> list[Check]:
    suite = "counterexample"
    fv_p, m_p, fv_q, m_q = counterexample_polynomials()
    return [
        Check(suite, "glued lattice f-vector", str(fv_q) == "(1, 19, 56, 60, 23, 1)", "(1, 19, 56, 60, 23, 1)", str(fv_q)),
        Check(suite, "pyramid over K and glued lattice share the f-vector", fv_p == fv_q, str(fv_p), str(fv_q)),
        _poly_check(suite, "pyramid over K (rank-3 formula times 2 - z)",
                    IntPolynomial([160, -464, 496, -232, 42, -1]), m_p),
        _poly_check(suite, "glued lattice (brute force)", IntPolynomial([160, -478, 524, -246, 42, -1]), m_q),
        Check(suite, "the two Möbius polynomials differ", m_p != m_q, "different", f"difference {(m_p - m_q).render()}"),
    ]


def run(suite: str) -> list[Check]:
    if suite == "all":
        return identities() + formulas() + counterexample()
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return {"identities": identities, "formulas": formulas, "counterexample": counterexample}[suite]()
