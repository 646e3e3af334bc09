"""Closed-form Möbius polynomials for polytope families and operations.

The formulas take f-vectors or previously computed polynomials and never
compute a Möbius value, which is what lets :mod:`mobiuspoly.mobius` serve as
an independent check on every one of them.  The ``is_*`` predicates at the
end test a poset against a formula's hypothesis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .mobius import face_top_bottom
from .polynomial import ONE, Z, IntPolynomial, RationalPolyFraction
from .poset import FVector, NijTable, bits, interval, restrict

TWO_MINUS_Z = IntPolynomial([2, -1])
ONE_MINUS_Z = IntPolynomial([1, -1])
THREE_MINUS_2Z = IntPolynomial([3, -2])


class HypothesisError(ValueError):
    """Input does not satisfy the hypothesis of the closed form being applied."""


class InconsistentSystem(HypothesisError):
    pass


def _require_face_fvector(fv: FVector):
    if fv.start != -1 or fv[-1] != 1:
        raise HypothesisError("f-vector must start at rank -1 with f_-1 = 1")


def pyramid_formula(m: IntPolynomial) -> IntPolynomial:
    return TWO_MINUS_Z * m


def simplex_formula(d: int) -> IntPolynomial:
    if d < 0:
        raise HypothesisError("simplex dimension must be >= 0")
    return TWO_MINUS_Z ** (d + 1)


def prism_fvector(fv: FVector) -> FVector:
    """f-vector of the prism: two copies of every non-empty face plus one face joining each pair."""
    _require_face_fvector(fv)
    d = fv.top
    counts = [1]
    for r in range(0, d + 2):
        counts.append(2 * fv[r] + (fv[r - 1] if r >= 1 else 0))
    return FVector(tuple(counts), -1)


def prism_formula(m: IntPolynomial, g_bottom: IntPolynomial, fv: FVector) -> IntPolynomial:
    """M of the prism from M, bottom polynomial and f-vector of the base."""
    _, prism_bottom = face_top_bottom(prism_fvector(fv))
    return THREE_MINUS_2Z * (m - g_bottom) + prism_bottom


def hypercube_formula(d: int) -> IntPolynomial:
    if d < 0:
        raise HypothesisError("hypercube dimension must be >= 0")
    return THREE_MINUS_2Z**d - Z * TWO_MINUS_Z**d + ONE


def hypercube_bottom(d: int) -> IntPolynomial:
    if d < 0:
        raise HypothesisError("hypercube dimension must be >= 0")
    return ONE - Z * TWO_MINUS_Z**d


def hat_formula(m_r: IntPolynomial) -> IntPolynomial:
    return m_r + ONE_MINUS_Z


def dot_formula(m_r: IntPolynomial, g_top_r: IntPolynomial) -> IntPolynomial:
    return hat_formula(m_r) - ONE_MINUS_Z * g_top_r


def glue_formula(
    m_p: IntPolynomial, m_q: IntPolynomial, m_r: IntPolynomial, g_top_r: IntPolynomial
) -> IntPolynomial:
    """M of two polytopes glued along a common facet whose face lattice has M = m_r."""
    return m_p + m_q - m_r - ONE + Z - ONE_MINUS_Z * g_top_r


def simplicial_formula(fv: FVector) -> IntPolynomial:
    """Sum of f_r (1-z)^(r+1); every lower interval must be boolean."""
    _require_face_fvector(fv)
    return sum((f * ONE_MINUS_Z ** (r + 1) for r, f in fv.items()), IntPolynomial())


def near_simplicial_formula(fv: FVector, g_top: IntPolynomial) -> IntPolynomial:
    _require_face_fvector(fv)
    below = FVector(fv.counts[:-1], -1)
    return g_top + simplicial_formula(below)


def boolean_top_formula(n: int) -> IntPolynomial:
    if n < 0:
        raise HypothesisError("n must be >= 0")
    return ONE_MINUS_Z**n


def euler_relation_holds(fv: FVector) -> bool:
    d = fv.top
    lhs = sum(fv[i] * (-1) ** i for i in range(0, d))
    return lhs == (-1) ** (d + 1) + 1


def _require_eulerian_fvector(fv: FVector):
    _require_face_fvector(fv)
    if fv.top < 0 or fv[fv.top] != 1:
        raise HypothesisError("f-vector must end with a single top element")
    if not euler_relation_holds(fv):
        raise HypothesisError(f"f-vector {fv} violates the Euler relation")


def eulerian_rank3_formula(fv: FVector) -> IntPolynomial:
    _require_eulerian_fvector(fv)
    if fv.top != 3:
        raise HypothesisError(f"rank-3 formula needs a rank-3 f-vector, got rank {fv.top}")
    f0, f1, f2 = fv[0], fv[1], fv[2]
    return IntPolynomial([2 + f0 + f1 + f2, -(f0 + 4 * f1 + f2), 4 * f1, -(f0 + f2), 1])


@dataclass(frozen=True)
class PartialNij:
    """Interval counts supplied alongside the f-vector: exactly the pairs in :func:`free_indices`."""

    d: int
    given: dict[tuple[int, int], int] = field(default_factory=dict)


def free_indices(d: int) -> list[tuple[int, int]]:
    """Pairs ``(i, j)`` with ``0 < i + 1 < j < d - 1``: empty up to rank 3, ``[(0, 2)]`` at rank 4."""
    return [(i, j) for i in range(0, d) for j in range(i + 2, d - 1)]


def eulerian_solve_nij(fv: FVector, given: PartialNij | dict | None = None) -> NijTable:
    """Complete the interval-count table of an Eulerian poset.

    Boundary entries are f-vector values.  The rest come from the two
    families of Euler-characteristic equations over lower and upper
    intervals: ``N[j-1, j]`` from the lower family for ``j <= d - 2``, then
    ``N[i, d-1]`` from the upper family for ``i`` counting down from
    ``d - 2``.  The one redundant equation (lower family at ``j = d - 1``)
    and every other equation are then re-checked.
    """
    _require_eulerian_fvector(fv)
    d = fv.top
    if isinstance(given, PartialNij):
        if given.d != d:
            raise HypothesisError(f"partial table is for rank {given.d}, f-vector has rank {d}")
        given = given.given
    given = {tuple(k): int(v) for k, v in (given or {}).items()}
    free = set(free_indices(d))
    if set(given) != free:
        raise HypothesisError(f"rank {d} needs exactly the free values {sorted(free)}, got {sorted(given)}")
    if any(v < 0 for v in given.values()):
        raise HypothesisError("interval counts must be non-negative")

    N: dict[tuple[int, int], int] = {}
    for r in range(-1, d + 1):
        N[r, r] = fv[r]
        N[-1, r] = fv[r]
        N[r, d] = fv[r]
    N.update(given)

    def lower_rhs(j):
        return ((-1) ** (j + 1) + 1) * fv[j]

    def upper_rhs(i):
        return ((-1) ** (d - i) + 1) * fv[i]

    for j in range(1, d - 1):
        rest = sum((-1) ** i * N[i, j] for i in range(0, j - 1))
        N[j - 1, j] = (-1) ** (j - 1) * (lower_rhs(j) - rest)
    for i in range(d - 2, -1, -1):
        rest = sum((-1) ** (j - i - 1) * N[i, j] for j in range(i + 1, d - 1))
        N[i, d - 1] = (-1) ** (d - i) * (upper_rhs(i) - rest)

    for j in range(1, d):
        if sum((-1) ** i * N[i, j] for i in range(0, j)) != lower_rhs(j):
            raise InconsistentSystem(f"lower-interval equation for rank {j} fails; f-vector and given counts disagree")
    for i in range(0, d - 1):
        if sum((-1) ** (j - i - 1) * N[i, j] for j in range(i + 1, d)) != upper_rhs(i):
            raise InconsistentSystem(f"upper-interval equation for rank {i} fails; f-vector and given counts disagree")
    negative = sorted(k for k, v in N.items() if v < 0)
    if negative:
        raise InconsistentSystem(f"no non-negative solution: N{negative[0]} = {N[negative[0]]}")
    table = {(i, j): N.get((i, j), 0) for i in range(-1, d + 1) for j in range(i, d + 1)}
    return NijTable(table, -1, d)


def mobius_from_nij(table: NijTable) -> IntPolynomial:
    """sum over i <= j of N[i, j] (-z)^(j - i), valid when every interval is Eulerian."""
    width = table.hi - table.lo + 1
    coeffs = [0] * width
    for (i, j), count in table.n.items():
        coeffs[j - i] += count * (-1) ** (j - i)
    return IntPolynomial(coeffs)


def eulerian_general_formula(fv: FVector, given: PartialNij | dict | None = None) -> IntPolynomial:
    return mobius_from_nij(eulerian_solve_nij(fv, given))


def hilbert_series(m: IntPolynomial) -> RationalPolyFraction:
    """(1 - z) / (1 - z M(z)), unreduced."""
    return RationalPolyFraction(ONE_MINUS_Z, ONE - Z * m)


def is_boolean_lattice(P) -> bool:
    """True when ``P`` is isomorphic to the subsets of its atoms, ranked by size."""
    b = P.bottom() if len(P) else None
    if b is None:
        return False
    atoms = [c for a, c in P.covers if a == b]
    if len(P) != 2 ** len(atoms):
        return False
    atom_mask = sum(1 << a for a in atoms)
    sets = [P.down[x] & atom_mask for x in range(len(P))]
    if len(set(sets)) != len(P):
        return False
    for x in range(len(P)):
        if P.ranks[x] != P.ranks[b] + bin(sets[x]).count("1"):
            return False
        for y in bits(P.up[x]):
            if sets[x] & ~sets[y]:
                return False
    # distinct atom sets, all 2^k present, order implies inclusion; check the converse
    for x in range(len(P)):
        for y in range(len(P)):
            if sets[x] & ~sets[y] == 0 and not (P.up[x] >> y) & 1:
                return False
    return True


def is_simplicial(P) -> bool:
    """Every interval is boolean; checking the intervals that start at a minimal element suffices."""
    for m in P.minimal_elements():
        for p in range(len(P)):
            if P.leq(m, p) and not is_boolean_lattice(interval(P, m, p)):
                return False
    return True


def is_near_simplicial(P) -> bool:
    return bool(len(P)) and is_simplicial(restrict(P, P.min_rank, P.max_rank - 1))
