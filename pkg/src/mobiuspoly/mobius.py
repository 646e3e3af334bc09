"""Brute-force Möbius polynomials and r-polynomials.

Everything here sums the recursively computed Möbius function over
comparable pairs.  Nothing assumes ``mu[p, q] = (-1)**(rank gap)``; that
identity is one of the things the test suite checks against these sums.
"""

from __future__ import annotations

from .polynomial import IntPolynomial, checked
from .poset import FVector, GradedPoset, PosetError, add_bounds, bits


def _accumulate(P: GradedPoset, keep) -> IntPolynomial:
    coeffs: list[int] = []
    for a in range(len(P)):
        row = P.mu_row(a)
        ra = P.ranks[a]
        for b in sorted(row):
            if not keep(ra, P.ranks[b]):
                continue
            gap = P.ranks[b] - ra
            if gap >= len(coeffs):
                coeffs.extend([0] * (gap + 1 - len(coeffs)))
            coeffs[gap] = checked(coeffs[gap] + row[b])
    return IntPolynomial(coeffs)


def mobius_polynomial(P: GradedPoset) -> IntPolynomial:
    """Sum of ``mu[p, q] * z**(rank q - rank p)`` over all ``p <= q``."""
    return _accumulate(P, lambda ra, rb: True)


def r_polynomial(P: GradedPoset, r: int) -> IntPolynomial:
    """Sum over the intervals ``[p, q]`` with ``rank p <= r <= rank q``.

    ``r = P.max_rank`` gives the top polynomial and ``r = P.min_rank`` (``-1``
    for face posets) the bottom polynomial.
    """
    if not len(P):
        raise PosetError("r-polynomial of an empty poset")
    lo, hi = P.rank_span
    if not lo <= r <= hi:
        raise PosetError(f"rank {r} outside the poset's rank span [{lo}, {hi}]")
    return _accumulate(P, lambda ra, rb: ra <= r <= rb)


def top_polynomial(P: GradedPoset) -> IntPolynomial:
    return r_polynomial(P, P.max_rank)


def bottom_polynomial(P: GradedPoset) -> IntPolynomial:
    return r_polynomial(P, P.min_rank)


def face_top_bottom(fv: FVector) -> tuple[IntPolynomial, IntPolynomial]:
    """Top and bottom polynomials of a face poset from its f-vector alone.

    top = sum f_r (-z)^(d-r), bottom = sum f_r (-z)^(r+1).
    """
    if fv.start != -1:
        raise PosetError("f-vector must be indexed from rank -1")
    d = fv.top
    top = [0] * (d + 2)
    bottom = [0] * (d + 2)
    for r, f in fv.items():
        top[d - r] += f * (-1) ** (d - r)
        bottom[r + 1] += f * (-1) ** (r + 1)
    return IntPolynomial(top), IntPolynomial(bottom)


def mobius_at_one_report(P: GradedPoset) -> tuple[int, int]:
    """``(M_P(1), mu[0, 1])`` where the Möbius value is taken in ``P`` with bounds adjoined.

    The two always satisfy ``value == mu_bounds + 1``.
    """
    value = mobius_polynomial(P)(1)
    B = add_bounds(P)
    return value, B.mobius(0, len(B) - 1)


def eulerian_violations(P: GradedPoset) -> list[tuple[int, int, int]]:
    """Comparable pairs whose recursive Möbius value is not ``(-1)**(rank gap)``."""
    bad = []
    for a in range(len(P)):
        row = P.mu_row(a)
        for b in bits(P.up[a]):
            expected = (-1) ** (P.ranks[b] - P.ranks[a])
            if row[b] != expected:
                bad.append((a, b, row[b]))
    return bad
