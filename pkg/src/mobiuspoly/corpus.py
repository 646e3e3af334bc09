"""The fixed set of face lattices the verification suites sweep over."""

from __future__ import annotations

from functools import lru_cache

from .constructions import (
    cross_polytope,
    cube_facet,
    cube_with_pyramids,
    glue_by_vertices,
    hypercube,
    polygon,
    prism,
    pyramid,
    simplex,
)
from .poset import GradedPoset


@lru_cache(maxsize=None)
def base_lattices() -> dict[str, GradedPoset]:
    out = {}
    for d in range(0, 6):
        out[f"simplex({d})"] = simplex(d)
    for d in range(0, 5):
        out[f"hypercube({d})"] = hypercube(d)
    for n in range(3, 13):
        out[f"polygon({n})"] = polygon(n)
    for d in range(1, 5):
        out[f"cross_polytope({d})"] = cross_polytope(d)
    return out


def pyramid_bases() -> dict[str, GradedPoset]:
    b = base_lattices()
    names = [f"polygon({n})" for n in range(3, 9)]
    names += [f"hypercube({d})" for d in range(0, 4)]
    names += [f"simplex({d})" for d in range(0, 5)]
    names += [f"cross_polytope({d})" for d in range(1, 4)]
    return {k: b[k] for k in names}


def prism_bases() -> dict[str, GradedPoset]:
    b = base_lattices()
    names = [f"polygon({n})" for n in range(3, 9)]
    names += [f"hypercube({d})" for d in range(0, 4)]
    names += [f"simplex({d})" for d in range(1, 4)]
    names += [f"cross_polytope({d})" for d in range(2, 4)]
    return {k: b[k] for k in names}


@lru_cache(maxsize=None)
def pyramids() -> dict[str, GradedPoset]:
    return {f"pyramid({k})": pyramid(P) for k, P in pyramid_bases().items()}


@lru_cache(maxsize=None)
def prisms() -> dict[str, GradedPoset]:
    return {f"prism({k})": prism(P) for k, P in prism_bases().items()}


@lru_cache(maxsize=None)
def gluings() -> dict[str, tuple[GradedPoset, GradedPoset, int, int, GradedPoset]]:
    """name -> (P, Q, facet id in P, facet id in Q, glued lattice)."""
    cube, tet, octa = hypercube(3), simplex(3), cross_polytope(3)
    tri_prism, sq_pyr = prism(simplex(2)), pyramid(polygon(4))
    octa_facet = next(list(octa.vertices[a]) for a in range(len(octa)) if octa.ranks[a] == 2)
    cases = {
        "glue(cube, cube)": (cube, cube, [1, 3, 5, 7], [0, 2, 4, 6]),
        "glue(tet, tet)": (tet, tet, [1, 2, 3], [0, 1, 2]),
        "glue(octahedron, tet)": (octa, tet, octa_facet, [0, 1, 2]),
        "glue(triangular prism, cube)": (tri_prism, cube, [1, 2, 4, 5], [0, 2, 4, 6]),
        "glue(square pyramid, cube)": (sq_pyr, cube, [0, 1, 2, 3], [0, 1, 2, 3]),
        "glue(4-cube, 4-cube)": (hypercube(4), hypercube(4), list(range(8)), list(range(8, 16))),
    }
    out = {}
    for name, (P, Q, fp, fq) in cases.items():
        G = glue_by_vertices(P, Q, fp, fq)
        out[name] = (P, Q, P.find_face(fp), Q.find_face(fq), G)
    stages = cube_with_pyramids(3)
    prev = hypercube(4)
    cap = pyramid(hypercube(3))
    for k, (axis, side) in enumerate([(0, 0), (0, 1), (1, 0)], start=1):
        out[f"cube_with_pyramids stage {k}"] = (
            prev,
            cap,
            prev.find_face(cube_facet(4, axis, side)),
            cap.find_face(range(8)),
            stages[k - 1],
        )
        prev = stages[k - 1]
    return out


@lru_cache(maxsize=None)
def all_lattices() -> dict[str, GradedPoset]:
    out = dict(base_lattices())
    out.update(pyramids())
    out.update(prisms())
    out.update({k: v[-1] for k, v in gluings().items()})
    return out
