import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mobiuspoly import closed_forms as cf
from mobiuspoly.constructions import (
    boolean_lattice,
    chain2,
    cross_polytope,
    cube_with_pyramids,
    hypercube,
    polygon,
    prism,
    pyramid,
    simplex,
)
from mobiuspoly.corpus import all_lattices
from mobiuspoly.mobius import bottom_polynomial, face_top_bottom, mobius_polynomial, top_polynomial
from mobiuspoly.polynomial import IntPolynomial as P
from mobiuspoly.polynomial import convolve
from mobiuspoly.poset import FVector, adjoin_top, collapse_top, nij_table, restrict

TWO_MINUS_Z = P([2, -1])
SQUARE = P([10, -16, 8, -1])
CUBE = P([28, -62, 48, -14, 1])
# (3-2z)^4 - z(2-z)^4 + 1 expanded by hand; coefficients sum to 1
C4_POLY = P([82, -232, 248, -120, 24, -1])


def fvec(*counts):
    return FVector(tuple(counts), -1)


def test_pyramid_formula():
    assert cf.pyramid_formula(TWO_MINUS_Z) == P([4, -4, 1])
    assert cf.pyramid_formula(TWO_MINUS_Z) == mobius_polynomial(pyramid(simplex(0)))
    assert cf.pyramid_formula(SQUARE) == P([20, -42, 32, -10, 1])
    for d in range(5):
        assert cf.pyramid_formula(TWO_MINUS_Z**d) == TWO_MINUS_Z ** (d + 1)


def test_simplex_formula():
    assert cf.simplex_formula(0) == TWO_MINUS_Z
    assert cf.simplex_formula(2) == P([8, -12, 6, -1])
    for d in range(7):
        assert cf.simplex_formula(d) == mobius_polynomial(simplex(d))
    with pytest.raises(cf.HypothesisError):
        cf.simplex_formula(-1)


def test_prism_formula():
    S = polygon(4)
    assert cf.prism_formula(SQUARE, bottom_polynomial(S), S.f_vector()) == CUBE
    assert P([3, -2]) * P([9, -12, 4]) + P([1, -8, 12, -6, 1]) == CUBE
    point = simplex(0)
    assert cf.prism_formula(TWO_MINUS_Z, P([1, -1]), point.f_vector()) == P([4, -4, 1])
    for d in range(1, 5):
        C = hypercube(d - 1)
        assert cf.prism_formula(mobius_polynomial(C), bottom_polynomial(C), C.f_vector()) == cf.hypercube_formula(d)


def test_prism_fvector():
    assert tuple(cf.prism_fvector(fvec(1, 3, 3, 1))) == (1, 6, 9, 5, 1)
    assert tuple(cf.prism_fvector(fvec(1, 1))) == (1, 2, 1)
    with pytest.raises(cf.HypothesisError):
        cf.prism_fvector(FVector((2, 1), 0))


def test_hypercube_formula():
    assert cf.hypercube_formula(0) == TWO_MINUS_Z
    assert cf.hypercube_formula(3) == CUBE
    assert cf.hypercube_formula(4) == C4_POLY
    assert cf.hypercube_formula(4) == mobius_polynomial(hypercube(4))
    assert cf.hypercube_bottom(0) == P([1, -1])
    assert cf.hypercube_bottom(1) == P([1, -2, 1])
    assert cf.hypercube_bottom(3) == P([1, -8, 12, -6, 1])
    with pytest.raises(cf.HypothesisError):
        cf.hypercube_formula(-1)


@pytest.mark.parametrize("R", [polygon(4), polygon(5), hypercube(3), simplex(0), simplex(1)], ids=str)
def test_hat_and_dot(R):
    m, g = mobius_polynomial(R), top_polynomial(R)
    assert cf.hat_formula(m) == mobius_polynomial(adjoin_top(R))
    assert cf.dot_formula(m, g) == mobius_polynomial(collapse_top(R))


def test_hat_and_dot_square_by_hand():
    one_minus_z = P([1, -1])
    assert cf.hat_formula(SQUARE) == SQUARE + one_minus_z
    assert cf.dot_formula(SQUARE, P([1, -4, 4, -1])) == SQUARE + one_minus_z - one_minus_z * P([1, -4, 4, -1])
    assert cf.hat_formula(P([1])) == mobius_polynomial(chain2())


def test_glue_formula_examples():
    C = hypercube(3)
    assert cf.glue_formula(CUBE, CUBE, SQUARE, P([1, -4, 4, -1])) == P([44, -102, 80, -22, 1])
    Q4 = cube_with_pyramids(2)[-1]
    cap = pyramid(C)
    expected = cf.glue_formula(mobius_polynomial(Q4), mobius_polynomial(cap), CUBE, top_polynomial(C))
    assert expected == P([160, -478, 524, -246, 42, -1])


def test_simplicial_formula():
    assert cf.simplicial_formula(fvec(1, 3, 3, 1)) == TWO_MINUS_Z**3
    assert cf.simplicial_formula(fvec(1, 1)) == TWO_MINUS_Z
    octa_boundary = restrict(cross_polytope(3), -1, 2)
    assert cf.simplicial_formula(fvec(1, 6, 12, 8)) == P([27, -54, 36, -8])
    assert mobius_polynomial(octa_boundary) == P([27, -54, 36, -8])
    with pytest.raises(cf.HypothesisError):
        cf.simplicial_formula(FVector((3, 1), 0))


def test_near_simplicial_formula():
    fv = fvec(1, 6, 12, 8, 1)
    top, _ = face_top_bottom(fv)
    assert cf.near_simplicial_formula(fv, top) == CUBE
    tet = fvec(1, 4, 6, 4, 1)
    assert cf.near_simplicial_formula(tet, face_top_bottom(tet)[0]) == TWO_MINUS_Z**4
    ico = fvec(1, 12, 30, 20, 1)
    via_near = cf.near_simplicial_formula(ico, face_top_bottom(ico)[0])
    assert via_near == cf.eulerian_rank3_formula(ico) == P([64, -152, 120, -32, 1])


def test_boolean_top_formula():
    assert cf.boolean_top_formula(1) == P([1, -1])
    assert cf.boolean_top_formula(3) == P([1, -3, 3, -1])
    for n in range(1, 6):
        assert cf.boolean_top_formula(n) == top_polynomial(boolean_lattice(n))


def test_rank3_formula():
    assert cf.eulerian_rank3_formula(hypercube(3).f_vector()) == CUBE
    assert cf.eulerian_rank3_formula(fvec(1, 18, 38, 22, 1)) == P([80, -192, 152, -40, 1])
    assert cf.eulerian_rank3_formula(fvec(1, 20, 30, 12, 1)) == P([64, -152, 120, -32, 1])
    with pytest.raises(cf.HypothesisError, match="Euler"):
        cf.eulerian_rank3_formula(fvec(1, 8, 12, 7, 1))
    with pytest.raises(cf.HypothesisError, match="rank-3"):
        cf.eulerian_rank3_formula(fvec(1, 4, 4, 1))


def test_euler_relation_on_corpus():
    for name, X in all_lattices().items():
        assert cf.euler_relation_holds(X.f_vector()), name


def test_free_indices():
    assert cf.free_indices(2) == []
    assert cf.free_indices(3) == []
    assert cf.free_indices(4) == [(0, 2)]
    assert cf.free_indices(5) == [(0, 2), (0, 3), (1, 3)]


def test_solver_cube_needs_no_free_values():
    table = cf.eulerian_solve_nij(hypercube(3).f_vector(), {})
    assert (table[0, 1], table[0, 2], table[1, 2]) == (24, 24, 24)
    assert table == nij_table(hypercube(3))


@pytest.mark.parametrize("X", [hypercube(4), pyramid(hypercube(3)), prism(hypercube(3)), cube_with_pyramids(3)[-1]],
                         ids=["C4", "Py(C3)", "Pr(C3)", "Q"])
def test_solver_recovers_tables(X):
    brute = nij_table(X)
    given = cf.PartialNij(X.max_rank, {k: brute[k] for k in cf.free_indices(X.max_rank)})
    assert cf.eulerian_solve_nij(X.f_vector(), given) == brute
    assert cf.eulerian_general_formula(X.f_vector(), given) == mobius_polynomial(X)


def test_general_formula_examples():
    C4 = hypercube(4)
    given = {(0, 2): nij_table(C4)[0, 2]}
    assert cf.eulerian_general_formula(C4.f_vector(), given) == C4_POLY
    for name, X in all_lattices().items():
        if X.max_rank == 3:
            assert cf.eulerian_general_formula(X.f_vector(), {}) == cf.eulerian_rank3_formula(X.f_vector()), name


def test_solver_errors():
    fv = hypercube(4).f_vector()
    with pytest.raises(cf.HypothesisError, match="free values"):
        cf.eulerian_solve_nij(fv, {})
    with pytest.raises(cf.HypothesisError, match="free values"):
        cf.eulerian_solve_nij(fv, {(0, 2): 96, (1, 3): 0})
    with pytest.raises(cf.HypothesisError, match="non-negative"):
        cf.eulerian_solve_nij(fv, {(0, 2): -1})
    with pytest.raises(cf.InconsistentSystem):
        cf.eulerian_solve_nij(fv, {(0, 2): 0})
    with pytest.raises(cf.HypothesisError, match="rank"):
        cf.eulerian_solve_nij(fv, cf.PartialNij(5, {}))
    with pytest.raises(cf.HypothesisError, match="Euler"):
        cf.eulerian_solve_nij(fvec(1, 16, 32, 24, 9, 1), {(0, 2): 96})


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=400))
def test_solver_is_unique_given_free_value(value):
    # any other free value either fails or yields a different table
    C4 = hypercube(4)
    brute = nij_table(C4)
    try:
        table = cf.eulerian_solve_nij(C4.f_vector(), {(0, 2): value})
    except cf.InconsistentSystem:
        return
    assert (table == brute) == (value == brute[0, 2])


def test_hilbert_series():
    h = cf.hilbert_series(TWO_MINUS_Z)
    assert (h.num, h.den) == (P([1, -1]), P([1, -2, 1]))
    assert h.series_coeffs(8) == [1] * 8
    h1 = cf.hilbert_series(P([1]))
    assert (h1.num, h1.den) == (P([1, -1]), P([1, -1]))
    assert h1.series_coeffs(4) == [1, 0, 0, 0]
    hs = cf.hilbert_series(SQUARE)
    assert hs.den == P([1, -10, 16, -8, 1])
    s = hs.series_coeffs(3)
    assert s[:2] == [1, 9] and s[2] == 9 * 10 - 16 == 74


@pytest.mark.parametrize("name", ["hypercube(4)", "cube_with_pyramids stage 3", "cross_polytope(4)", "polygon(12)"])
def test_hilbert_convolution(name):
    h = cf.hilbert_series(mobius_polynomial(all_lattices()[name]))
    s = h.series_coeffs(20)
    assert convolve(list(h.den), s, 20) == [h.num[k] for k in range(20)]


def test_counterexample_separation():
    k = fvec(1, 18, 38, 22, 1)
    m_p = cf.pyramid_formula(cf.eulerian_rank3_formula(k))
    Q = cube_with_pyramids(3)[-1]
    m_q = mobius_polynomial(Q)
    assert tuple(Q.f_vector()) == tuple(k[r] + k[r - 1] for r in range(-1, 5))
    assert m_p - m_q == P([0, 14, -28, 14])


def test_hypothesis_predicates():
    assert cf.is_boolean_lattice(boolean_lattice(3))
    assert not cf.is_boolean_lattice(polygon(4))
    assert cf.is_simplicial(simplex(4))
    assert cf.is_simplicial(restrict(cross_polytope(3), -1, 2))
    assert not cf.is_simplicial(hypercube(3))
    assert cf.is_near_simplicial(cross_polytope(4))
    assert not cf.is_near_simplicial(hypercube(3))
