import pytest
from hypothesis import given
from hypothesis import strategies as st

from mobiuspoly.polynomial import (
    INT64_MAX,
    ONE,
    Z,
    IntPolynomial,
    RationalPolyFraction,
    convolve,
    poly_add,
    poly_eval,
    poly_mul,
    poly_pow,
    poly_sub,
    series_coeffs,
)

P = IntPolynomial
TWO_MINUS_Z = P([2, -1])
SQUARE = P([10, -16, 8, -1])

small = st.integers(min_value=-50, max_value=50)
polys = st.lists(small, max_size=6).map(P)


def test_products():
    assert poly_mul(TWO_MINUS_Z, TWO_MINUS_Z) == P([4, -4, 1])
    assert poly_mul(TWO_MINUS_Z, SQUARE) == P([20, -42, 32, -10, 1])
    assert poly_add(SQUARE, P()) == SQUARE
    assert poly_sub(SQUARE, SQUARE) == P()


def test_powers():
    assert poly_pow(TWO_MINUS_Z, 0) == ONE
    assert poly_pow(TWO_MINUS_Z, 3) == P([8, -12, 6, -1])
    assert poly_pow(P([1, -1]), 4) == P([1, -4, 6, -4, 1])
    with pytest.raises(ValueError):
        TWO_MINUS_Z ** -1


def test_evaluation():
    assert poly_eval(TWO_MINUS_Z, 1) == 1
    assert poly_eval(SQUARE, 1) == 1
    assert all(poly_eval(P(), x) == 0 for x in (-3, 0, 7))
    assert SQUARE(2) == 10 - 32 + 32 - 8


def test_trailing_zeros_trimmed():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).degree == -1
    assert P([0, 0]) == 0
    assert Z.shift(2) == P([0, 0, 0, 1])


def test_immutable():
    with pytest.raises(AttributeError):
        SQUARE.coeffs = (1,)


def test_overflow_is_checked():
    with pytest.raises(OverflowError):
        P([INT64_MAX + 1])
    big = P([2**62])
    with pytest.raises(OverflowError):
        big + big
    with pytest.raises(OverflowError):
        big * P([4])
    with pytest.raises(OverflowError):
        P([0, 0, 1])(2**40)


@pytest.mark.parametrize(
    "poly, text",
    [
        (SQUARE, "10 - 16*z + 8*z^2 - 1*z^3"),
        (P(), "0"),
        (P([0, -1]), "-1*z"),
        (P([-3, 0, 2]), "-3 + 2*z^2"),
    ],
)
def test_render(poly, text):
    assert poly.render() == text
    assert P.parse(text) == poly


def test_parse_lenient_and_errors():
    assert P.parse("2 - z") == TWO_MINUS_Z
    assert P.parse("z^2+z+1") == P([1, 1, 1])
    assert P.parse("1 + 1") == P([2])
    assert P.parse("3 z") == P([0, 3])
    for bad in ("", "2 +", "x", "+", "2 - - z", "z^"):
        with pytest.raises(ValueError):
            P.parse(bad)


def test_json():
    assert SQUARE.to_json() == "[10,-16,8,-1]"
    assert P.from_json("[10, -16, 8, -1]") == SQUARE
    with pytest.raises(ValueError):
        P.from_json('{"a": 1}')


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == P()
    assert a * ONE == a


@given(polys, polys, st.integers(min_value=-5, max_value=5))
def test_evaluation_is_a_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(polys)
def test_render_parse_roundtrip(a):
    assert P.parse(a.render()) == a
    assert P.from_json(a.to_json()) == a


@given(polys, st.integers(min_value=0, max_value=4))
def test_power_matches_repeated_product(a, n):
    expected = ONE
    for _ in range(n):
        expected = expected * a
    assert a**n == expected


def test_series_examples():
    assert series_coeffs(RationalPolyFraction(P([1, -1]), P([1, -2, 1])), 6) == [1] * 6
    assert series_coeffs(RationalPolyFraction(ONE, P([1, -2])), 5) == [1, 2, 4, 8, 16]
    assert series_coeffs(RationalPolyFraction(P([1, -1]), ONE), 4) == [1, -1, 0, 0]
    assert series_coeffs(RationalPolyFraction(ONE, ONE), 0) == []


def test_series_errors():
    with pytest.raises(ZeroDivisionError):
        series_coeffs(RationalPolyFraction(ONE, Z), 3)
    with pytest.raises(ArithmeticError):
        series_coeffs(RationalPolyFraction(ONE, P([2, 1])), 3)
    with pytest.raises(ZeroDivisionError):
        RationalPolyFraction(ONE, P())
    with pytest.raises(ValueError):
        series_coeffs(RationalPolyFraction(ONE, ONE), -1)


def test_series_is_unbounded():
    s = series_coeffs(RationalPolyFraction(ONE, P([1, -(2**40)])), 4)
    assert s[3] == 2**120


def test_fraction_equality_by_cross_multiplication():
    a = RationalPolyFraction(P([1, -1]), P([1, -2, 1]))
    b = RationalPolyFraction(ONE, P([1, -1]))
    assert a == b
    assert RationalPolyFraction(ONE, P([-1])) == RationalPolyFraction(P([-1]), ONE)
    assert RationalPolyFraction(ONE, P([1, -1])).den == P([1, -1])
    with pytest.raises(TypeError):
        hash(a)


@given(polys, st.sampled_from([1, -1]), st.lists(small, max_size=3))
def test_series_convolution_identity(num, unit, tail):
    den = P([unit, *tail])
    n = 12
    s = series_coeffs(RationalPolyFraction(num, den), n)
    assert convolve(list(den), s, n) == [num[k] for k in range(n)]
