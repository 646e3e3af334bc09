"""Named face lattices and the pyramid, prism and gluing operations.

All constructions work on vertex-labelled face posets and finish with
:func:`build_from_faces`, so the order is always plain vertex-set inclusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .poset import (
    GradedPoset,
    PosetError,
    are_isomorphic,
    build_from_covers,
    build_from_faces,
    dual,
    interval,
    label_by_atoms,
)


def _proper_faces(P: GradedPoset):
    """``(vertices, rank)`` for every element except the empty face."""
    if P.vertices is None:
        raise PosetError("operation needs a vertex-labelled face poset")
    P.require_polytopal("face-poset operation")
    return [(P.vertices[a], P.ranks[a]) for a in range(len(P)) if P.ranks[a] >= 0]


def point() -> GradedPoset:
    return build_from_faces([((0,), 0)])


def simplex(d: int) -> GradedPoset:
    """All non-empty subsets of ``{0..d}``; a subset of size k has rank k - 1."""
    if d < 0:
        raise PosetError("simplex dimension must be >= 0")
    verts = range(d + 1)
    return build_from_faces(
        (subset, k - 1) for k in range(1, d + 2) for subset in combinations(verts, k)
    )


def boolean_lattice(n: int) -> GradedPoset:
    """Subsets of an n-set by inclusion, ranked by size - 1; the same lattice as ``simplex(n - 1)``."""
    if n < 1:
        raise PosetError("boolean lattice needs n >= 1")
    return simplex(n - 1)


def polygon(n: int) -> GradedPoset:
    if n < 3:
        raise PosetError("a polygon needs at least 3 sides")
    faces = [((i,), 0) for i in range(n)]
    faces += [((i, (i + 1) % n), 1) for i in range(n)]
    faces.append((tuple(range(n)), 2))
    return build_from_faces(faces)


def pyramid(P: GradedPoset) -> GradedPoset:
    """Cone over ``P`` with a fresh apex vertex one label above the largest."""
    faces = _proper_faces(P)
    apex = max(v for vs, _ in faces for v in vs) + 1
    lifted = [((apex,), 0)] + [((*vs, apex), r + 1) for vs, r in faces]
    return build_from_faces(faces + lifted)


def prism(P: GradedPoset) -> GradedPoset:
    """Two copies of ``P`` joined face by face.

    Copy one keeps the labels, copy two adds ``max label + 1``, so iterating
    from a point labels the hypercube's vertices by their 0/1 coordinates.
    """
    faces = _proper_faces(P)
    offset = max(v for vs, _ in faces for v in vs) + 1
    out = []
    for vs, r in faces:
        moved = tuple(v + offset for v in vs)
        out.append((vs, r))
        out.append((moved, r))
        out.append((vs + moved, r + 1))
    return build_from_faces(out)


def hypercube(d: int) -> GradedPoset:
    if d < 0:
        raise PosetError("hypercube dimension must be >= 0")
    C = point()
    for _ in range(d):
        C = prism(C)
    return C


def cross_polytope(d: int) -> GradedPoset:
    """Dual of the d-cube, relabelled so its vertices are the cube's facets."""
    if d < 1:
        raise PosetError("cross-polytope dimension must be >= 1")
    return label_by_atoms(dual(hypercube(d)))


def chain2() -> GradedPoset:
    """Two-element chain, ranks 0 and 1."""
    return build_from_covers([0, 1], [(0, 1)])


def u_poset() -> GradedPoset:
    """``u`` (rank 1) above the two rank-0 elements ``v`` and ``w``."""
    return build_from_covers([1, 0, 0], [(1, 0), (2, 0)])


@dataclass(frozen=True)
class GluingSpec:
    """Facets to identify, by element id, and an optional vertex bijection.

    ``vertex_map`` sends vertices of ``facet_p`` (labels in ``P``) to vertices
    of ``facet_q`` (labels in ``Q``).  When omitted it is read off an
    isomorphism of the two facet lattices.
    """

    facet_p: int
    facet_q: int
    vertex_map: dict[int, int] | None = None


def _facet_vertex_map(P: GradedPoset, Q: GradedPoset, spec: GluingSpec) -> dict[int, int]:
    RP = interval(P, P.bottom(), spec.facet_p)
    RQ = interval(Q, Q.bottom(), spec.facet_q)
    faces_p = {RP.vertices[a] for a in range(len(RP))}
    faces_q = {RQ.vertices[a] for a in range(len(RQ))}
    if spec.vertex_map is None:
        iso = are_isomorphic(RP, RQ)
        if iso is None:
            raise PosetError(
                f"facets {list(P.vertices[spec.facet_p])} and {list(Q.vertices[spec.facet_q])} "
                "have non-isomorphic face lattices"
            )
        return {RP.vertices[a][0]: RQ.vertices[b][0] for a, b in iso.items() if RP.ranks[a] == 0}
    vmap = {int(k): int(v) for k, v in spec.vertex_map.items()}
    if set(vmap) != set(P.vertices[spec.facet_p]):
        raise PosetError(f"vertex map keys must be exactly the vertices of {list(P.vertices[spec.facet_p])}")
    if sorted(vmap.values()) != list(Q.vertices[spec.facet_q]):
        raise PosetError(f"vertex map must be a bijection onto {list(Q.vertices[spec.facet_q])}")
    for vs in faces_p:
        image = tuple(sorted(vmap[v] for v in vs))
        if image not in faces_q:
            raise PosetError(f"vertex map sends face {list(vs)} to {list(image)}, which is not a face of Q's facet")
    return vmap


def glue(P: GradedPoset, Q: GradedPoset, spec: GluingSpec) -> GradedPoset:
    """Glue two d-dimensional face posets along isomorphic facets.

    Both copies of the shared facet and both old tops are removed; the
    facet's proper faces are kept once and a new top is added at rank d.
    Vertices of ``Q`` on the facet take ``P``'s labels, the rest are shifted
    past ``P``'s largest label.
    """
    for X, name in ((P, "P"), (Q, "Q")):
        if X.vertices is None:
            raise PosetError(f"{name} has no vertex labels")
        X.require_polytopal("glue")
    d = P.max_rank
    if Q.max_rank != d:
        raise PosetError(f"cannot glue posets of rank {d} and {Q.max_rank}")
    for X, f, name in ((P, spec.facet_p, "P"), (Q, spec.facet_q, "Q")):
        X.check_id(f)
        if X.ranks[f] != d - 1:
            raise PosetError(f"facet of {name} has rank {X.ranks[f]}, expected {d - 1}")
    vmap = _facet_vertex_map(P, Q, spec)

    back = {q: p for p, q in vmap.items()}
    fresh = max(v for vs in P.vertices for v in vs) + 1
    for v in sorted({v for vs in Q.vertices for v in vs} - set(back)):
        back[v] = fresh
        fresh += 1

    tp, tq = P.top(), Q.top()
    faces = []
    for a in range(len(P)):
        if P.ranks[a] >= 0 and a not in (spec.facet_p, tp):
            faces.append((P.vertices[a], P.ranks[a]))
    for b in range(len(Q)):
        if Q.ranks[b] >= 0 and b != tq and not Q.leq(b, spec.facet_q):
            faces.append((tuple(back[v] for v in Q.vertices[b]), Q.ranks[b]))
    everything = sorted({v for vs, _ in faces for v in vs})
    faces.append((tuple(everything), d))
    return build_from_faces(faces)


def glue_by_vertices(P: GradedPoset, Q: GradedPoset, facet_p, facet_q, vertex_map=None) -> GradedPoset:
    """:func:`glue` with the facets named by their vertex lists."""
    return glue(P, Q, GluingSpec(P.find_face(facet_p), Q.find_face(facet_q), vertex_map))


def cube_facet(d: int, axis: int, side: int) -> list[int]:
    """Vertices of the d-cube facet where coordinate ``axis`` equals ``side``."""
    return [v for v in range(2**d) if (v >> axis) & 1 == side]


def cube_with_pyramids(stages: int = 3) -> list[GradedPoset]:
    """The 4-cube with pyramids over the 3-cube glued onto successive cube facets.

    Returns the lattice after each gluing; the third one has f-vector
    (1, 19, 56, 60, 23, 1), the same as the pyramid over any 3-polytope with
    f-vector (1, 18, 38, 22, 1).
    """
    facets = [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0), (2, 1), (3, 0), (3, 1)]
    if not 0 <= stages <= len(facets):
        raise PosetError(f"stages must be between 0 and {len(facets)}")
    cap = pyramid(hypercube(3))
    base = list(range(8))
    out = []
    current = hypercube(4)
    for axis, side in facets[:stages]:
        current = glue_by_vertices(current, cap, cube_facet(4, axis, side), base)
        out.append(current)
    return out
