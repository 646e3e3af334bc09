"""Exact Möbius polynomials of convex-polytope face lattices.

Brute-force computation over explicit posets, closed forms for pyramids,
prisms, gluings, simplicial and Eulerian posets, and checks of one against
the other.
"""

from .closed_forms import (
    PartialNij,
    boolean_top_formula,
    dot_formula,
    eulerian_general_formula,
    eulerian_rank3_formula,
    eulerian_solve_nij,
    glue_formula,
    hat_formula,
    hilbert_series,
    hypercube_bottom,
    hypercube_formula,
    near_simplicial_formula,
    prism_formula,
    pyramid_formula,
    simplex_formula,
    simplicial_formula,
)
from .constructions import (
    GluingSpec,
    boolean_lattice,
    chain2,
    cross_polytope,
    glue,
    hypercube,
    polygon,
    prism,
    pyramid,
    simplex,
    u_poset,
)
from .mobius import face_top_bottom, mobius_at_one_report, mobius_polynomial, r_polynomial
from .polynomial import IntPolynomial, RationalPolyFraction, series_coeffs
from .poset import (
    FVector,
    GradedPoset,
    NijTable,
    PosetError,
    add_bounds,
    adjoin_top,
    are_isomorphic,
    build_from_covers,
    build_from_faces,
    collapse_top,
    direct_product,
    dual,
    f_vector,
    interval,
    leq,
    mobius,
    nij_table,
    restrict,
)

__version__ = "0.1.0"
