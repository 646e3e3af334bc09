"""Finite ranked posets with stored ranks and bitset reachability.

Elements are dense integer ids.  ``up[a]`` is an int bitmask of every ``b``
with ``a <= b`` (reflexive); ``down[b]`` is its transpose.  Posets are
immutable once built, so every query below is a pure read.

Face posets carry a sorted vertex tuple per element; the empty face is the
unique element of rank -1.
"""

from __future__ import annotations

import sys
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .polynomial import checked

DEFAULT_ISO_CAP = 200


class PosetError(ValueError):
    """Invalid poset input or a violated precondition."""


class GradednessError(PosetError):
    pass


class IsomorphismCapExceeded(PosetError):
    """Poset too large for the backtracking search; pass an explicit map instead."""


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Element:
    id: int
    rank: int
    vertices: tuple[int, ...] | None = None


@dataclass(frozen=True)
class FVector:
    """Element counts per rank, ``counts[0]`` being rank ``start``."""

    counts: tuple[int, ...]
    start: int = -1

    def __getitem__(self, rank: int) -> int:
        k = rank - self.start
        return self.counts[k] if 0 <= k < len(self.counts) else 0

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return len(self.counts)

    @property
    def top(self) -> int:
        return self.start + len(self.counts) - 1

    def items(self):
        return [(self.start + k, c) for k, c in enumerate(self.counts)]

    def __str__(self):
        return "(" + ", ".join(map(str, self.counts)) + ")"


@dataclass(frozen=True)
class NijTable:
    """Number of comparable pairs ``p <= q`` with ``rank(p) = i``, ``rank(q) = j``."""

    n: dict[tuple[int, int], int]
    lo: int
    hi: int

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.n.get(key, 0)

    def __eq__(self, other):
        if not isinstance(other, NijTable):
            return NotImplemented
        keys = set(self.n) | set(other.n)
        return all(self[k] == other[k] for k in keys)

    def rows(self):
        for i in range(self.lo, self.hi + 1):
            yield i, [self[i, j] for j in range(i, self.hi + 1)]


class GradedPoset:
    """Immutable finite poset with an explicit rank per element.

    Built through :func:`build_from_faces`, :func:`build_from_covers` or the
    operations in this module, never by hand.  ``provenance[i]`` names where
    element ``i`` came from in the parent poset (an id, a pair of ids for
    products, or ``None`` for adjoined elements).
    """

    def __init__(
        self,
        ranks: Sequence[int],
        up: Sequence[int],
        vertices: Sequence[tuple[int, ...]] | None = None,
        provenance: Sequence | None = None,
        *,
        require_graded: bool = True,
    ):
        n = len(ranks)
        if len(up) != n:
            raise PosetError("rank list and reachability list differ in length")
        self.ranks = tuple(int(r) for r in ranks)
        self.up = tuple(m | (1 << i) for i, m in enumerate(up))
        down = [0] * n
        for a, m in enumerate(self.up):
            for b in bits(m):
                if b >= n:
                    raise PosetError(f"id {b} out of range")
                down[b] |= 1 << a
        self.down = tuple(down)
        for a in range(n):
            for b in bits(self.up[a] & ~(1 << a)):
                if self.ranks[b] <= self.ranks[a]:
                    if (self.up[b] >> a) & 1:
                        raise PosetError(f"cycle between elements {a} and {b}")
                    raise GradednessError(
                        f"element {a} (rank {self.ranks[a]}) lies below {b} (rank {self.ranks[b]})"
                    )
        covers = []
        for a in range(n):
            strict_up = self.up[a] & ~(1 << a)
            for b in bits(strict_up):
                if not strict_up & self.down[b] & ~(1 << b):
                    covers.append((a, b))
        self.covers = tuple(covers)
        self.graded = all(self.ranks[b] - self.ranks[a] == 1 for a, b in covers)
        if require_graded and not self.graded:
            a, b = next((a, b) for a, b in covers if self.ranks[b] - self.ranks[a] != 1)
            raise GradednessError(
                f"cover {a} < {b} jumps from rank {self.ranks[a]} to rank {self.ranks[b]}"
            )
        self.vertices = tuple(tuple(v) for v in vertices) if vertices is not None else None
        self.provenance = tuple(provenance) if provenance is not None else None
        self._mu_rows: dict[int, dict[int, int]] = {}
        self._mu_lock = threading.Lock()

    def __len__(self):
        return len(self.ranks)

    def __repr__(self):
        kind = "face poset" if self.vertices is not None else "poset"
        return f"<GradedPoset {kind}: {len(self)} elements, f={self.f_vector()}>"

    @property
    def elements(self) -> list[Element]:
        vs = self.vertices
        return [Element(i, r, vs[i] if vs is not None else None) for i, r in enumerate(self.ranks)]

    @property
    def rank_span(self) -> tuple[int, int] | None:
        if not self.ranks:
            return None
        return min(self.ranks), max(self.ranks)

    @property
    def min_rank(self) -> int:
        return min(self.ranks)

    @property
    def max_rank(self) -> int:
        """The rank of the poset, i.e. the largest element rank."""
        return max(self.ranks)

    def check_id(self, a: int):
        if not 0 <= a < len(self.ranks):
            raise IndexError(f"element id {a} out of range 0..{len(self.ranks) - 1}")

    def leq(self, a: int, b: int) -> bool:
        self.check_id(a)
        self.check_id(b)
        return bool((self.up[a] >> b) & 1)

    def minimal_elements(self) -> list[int]:
        return [a for a in range(len(self)) if self.down[a] == 1 << a]

    def maximal_elements(self) -> list[int]:
        return [a for a in range(len(self)) if self.up[a] == 1 << a]

    def bottom(self) -> int | None:
        mins = self.minimal_elements()
        return mins[0] if len(mins) == 1 else None

    def top(self) -> int | None:
        maxs = self.maximal_elements()
        return maxs[0] if len(maxs) == 1 else None

    @property
    def polytopal(self) -> bool:
        """Unique minimum at rank -1, unique maximum, and all covers one rank apart.

        Together these force every maximal chain to run from rank -1 to the top.
        """
        if not self.ranks:
            return False
        lo, t = self.bottom(), self.top()
        return lo is not None and t is not None and self.ranks[lo] == -1 and self.graded

    def require_polytopal(self, what: str = "operation"):
        if not self.polytopal:
            raise PosetError(f"{what} needs a poset with unique minimum of rank -1, unique maximum, and no rank gaps")

    def vertex_set(self, a: int) -> tuple[int, ...]:
        if self.vertices is None:
            raise PosetError("poset has no vertex labels")
        return self.vertices[a]

    def find_face(self, verts: Iterable[int]) -> int:
        """Id of the element whose vertex set is ``verts`` (the highest-ranked one on ties)."""
        key = tuple(sorted(set(verts)))
        hits = [a for a in range(len(self)) if self.vertex_set(a) == key]
        if not hits:
            raise PosetError(f"no face with vertex set {list(key)}")
        return max(hits, key=lambda a: self.ranks[a])

    def by_rank(self) -> list[int]:
        return sorted(range(len(self)), key=lambda a: (self.ranks[a], a))

    def mu_row(self, a: int) -> dict[int, int]:
        """``{b: mu[a, b]}`` for every ``b >= a``, by the defining recursion."""
        row = self._mu_rows.get(a)
        if row is not None:
            return row
        upper = self.up[a]
        row = {a: 1}
        for b in sorted(bits(upper & ~(1 << a)), key=lambda x: self.ranks[x]):
            below = upper & self.down[b] & ~(1 << b)
            row[b] = checked(-sum(row[s] for s in bits(below)))
        with self._mu_lock:
            return self._mu_rows.setdefault(a, row)

    def mobius(self, a: int, b: int) -> int:
        self.check_id(a)
        self.check_id(b)
        return self.mu_row(a).get(b, 0)

    def comparable_pairs(self) -> Iterator[tuple[int, int]]:
        for a in range(len(self)):
            for b in bits(self.up[a]):
                yield a, b

    def f_vector(self) -> FVector:
        if not self.ranks:
            return FVector((), -1)
        lo, hi = self.rank_span
        c = Counter(self.ranks)
        return FVector(tuple(c[r] for r in range(lo, hi + 1)), lo)


# -- construction ---------------------------------------------------------


def build_from_faces(faces: Iterable[tuple[Iterable[int], int]]) -> GradedPoset:
    """Face poset of the given ``(vertex set, rank)`` pairs plus the empty face.

    The order is vertex-set inclusion.  Ids follow ``(rank, sorted vertex
    tuple)``, so the result does not depend on input order.
    """
    items = []
    for verts, rank in faces:
        vs = tuple(sorted(set(int(v) for v in verts)))
        if any(v < 0 for v in vs):
            raise PosetError(f"negative vertex label in {list(vs)}")
        if rank < 0 or not vs:
            raise PosetError(f"face {list(vs)} has rank {rank}; give only non-empty faces of rank >= 0")
        items.append((int(rank), vs))
    if not items:
        raise PosetError("no faces given")
    items.append((-1, ()))
    items.sort()
    seen = {}
    for rank, vs in items:
        if vs in seen:
            raise PosetError(f"duplicate vertex set {list(vs)} (ranks {seen[vs]} and {rank})")
        seen[vs] = rank
    labels = sorted({v for _, vs in items for v in vs})
    bit_of = {v: k for k, v in enumerate(labels)}
    masks = [sum(1 << bit_of[v] for v in vs) for _, vs in items]
    n = len(items)
    up = [0] * n
    for a in range(n):
        ma, ra = masks[a], items[a][0]
        for b in range(n):
            mb = masks[b]
            if a != b and ma & ~mb == 0:
                if items[b][0] <= ra:
                    raise PosetError(
                        f"face {list(items[a][1])} (rank {ra}) is inside face "
                        f"{list(items[b][1])} of rank {items[b][0]}"
                    )
                up[a] |= 1 << b
    try:
        return GradedPoset([r for r, _ in items], up, [vs for _, vs in items])
    except GradednessError as exc:
        raise GradednessError(f"{exc}; faces: {[list(vs) for _, vs in items]!s:.200}") from None


def build_from_covers(ranks: Sequence[int], covers: Iterable[tuple[int, int]]) -> GradedPoset:
    """Abstract poset from explicit cover pairs ``(lower, upper)``; ids are list positions."""
    n = len(ranks)
    covers = [(int(a), int(b)) for a, b in covers]
    for a, b in covers:
        if not (0 <= a < n and 0 <= b < n):
            raise PosetError(f"cover ({a}, {b}) refers to a missing element")
        if ranks[b] != ranks[a] + 1:
            raise GradednessError(f"cover ({a}, {b}) jumps from rank {ranks[a]} to {ranks[b]}")
    above = [[] for _ in range(n)]
    for a, b in covers:
        above[a].append(b)
    up = [0] * n
    for a in sorted(range(n), key=lambda x: -ranks[x]):
        m = 1 << a
        for b in above[a]:
            m |= up[b]
        up[a] = m
    return GradedPoset(ranks, up)


def induced(P: GradedPoset, keep: Sequence[int], *, require_graded=False) -> GradedPoset:
    """Subposet on the ids in ``keep`` (in that order), ranks and labels kept."""
    index = {old: new for new, old in enumerate(keep)}
    keep_mask = sum(1 << a for a in keep)
    up = []
    for old in keep:
        up.append(sum(1 << index[b] for b in bits(P.up[old] & keep_mask)))
    verts = [P.vertices[a] for a in keep] if P.vertices is not None else None
    return GradedPoset([P.ranks[a] for a in keep], up, verts, list(keep), require_graded=require_graded)


def leq(P: GradedPoset, a: int, b: int) -> bool:
    return P.leq(a, b)


def mobius(P: GradedPoset, a: int, b: int) -> int:
    return P.mobius(a, b)


def f_vector(P: GradedPoset) -> FVector:
    return P.f_vector()


def interval(P: GradedPoset, a: int, b: int) -> GradedPoset:
    """Closed interval ``[a, b]`` as an induced subposet; empty when ``a`` is not below ``b``."""
    P.check_id(a)
    P.check_id(b)
    return induced(P, list(bits(P.up[a] & P.down[b])))


def restrict(P: GradedPoset, lo: int, hi: int) -> GradedPoset:
    """Elements with ``lo <= rank <= hi``, original ranks kept."""
    if lo > hi:
        raise PosetError("restrict needs lo <= hi")
    return induced(P, [a for a in range(len(P)) if lo <= P.ranks[a] <= hi])


def dual(P: GradedPoset) -> GradedPoset:
    """Order-reversed poset with ranks ``r -> (d - 1) - r``; vertex labels are dropped."""
    P.require_polytopal("dual")
    d = P.max_rank
    return GradedPoset([d - 1 - r for r in P.ranks], P.down, None, list(range(len(P))))


def direct_product(P: GradedPoset, Q: GradedPoset) -> GradedPoset:
    """Componentwise order on pairs; element ``(p, q)`` gets id ``p * len(Q) + q``.

    Ranks add, shifted so the product's minimum rank is the smaller of the
    two factors' minimum ranks (e.g. -1 for a face poset times anything
    starting at 0 or -1).
    """
    if not len(P) or not len(Q):
        return GradedPoset([], [])
    nq = len(Q)
    p0, q0 = P.min_rank, Q.min_rank
    base = min(p0, q0)
    ranks, up, prov = [], [], []
    for p in range(len(P)):
        for q in range(nq):
            ranks.append(P.ranks[p] - p0 + Q.ranks[q] - q0 + base)
            m = 0
            for p2 in bits(P.up[p]):
                m |= Q.up[q] << (p2 * nq)
            up.append(m)
            prov.append((p, q))
    return GradedPoset(ranks, up, None, prov, require_graded=P.graded and Q.graded)


def add_bounds(P: GradedPoset) -> GradedPoset:
    """Adjoin a new global minimum (id 0) and maximum (last id)."""
    n = len(P)
    lo, hi = P.rank_span if n else (0, -1)
    full = (1 << (n + 2)) - 1
    top_bit = 1 << (n + 1)
    up = [full] + [(m << 1) | top_bit for m in P.up] + [top_bit]
    ranks = [lo - 1, *P.ranks, hi + 1]
    return GradedPoset(ranks, up, None, [None, *range(n), None], require_graded=False)


def adjoin_top(P: GradedPoset) -> GradedPoset:
    """``P`` plus one element above everything, at rank ``max + 1``."""
    n = len(P)
    top_bit = 1 << n
    hi = P.max_rank if n else -2
    up = [m | top_bit for m in P.up] + [top_bit]
    return GradedPoset([*P.ranks, hi + 1], up, None, [*range(n), None], require_graded=False)


def collapse_top(P: GradedPoset) -> GradedPoset:
    """Replace the unique maximum by a new top one rank higher.

    The new top sits two ranks above the old top's lower covers, so the
    result is ranked but not graded.
    """
    t = P.top() if len(P) else None
    if t is None:
        raise PosetError("collapse_top needs a unique maximum")
    keep = [a for a in range(len(P)) if a != t]
    n = len(keep)
    index = {old: new for new, old in enumerate(keep)}
    top_bit = 1 << n
    up = [sum(1 << index[b] for b in bits(P.up[a] & ~(1 << t))) | top_bit for a in keep]
    up.append(top_bit)
    ranks = [P.ranks[a] for a in keep] + [P.ranks[t] + 1]
    return GradedPoset(ranks, up, None, [*keep, None], require_graded=False)


def nij_table(P: GradedPoset) -> NijTable:
    n: Counter = Counter()
    for a, b in P.comparable_pairs():
        n[P.ranks[a], P.ranks[b]] += 1
    if not len(P):
        return NijTable({}, 0, -1)
    lo, hi = P.rank_span
    table = {(i, j): n[i, j] for i in range(lo, hi + 1) for j in range(i, hi + 1)}
    return NijTable(table, lo, hi)


def label_by_atoms(P: GradedPoset) -> GradedPoset:
    """Face poset whose vertices are the rank-0 elements: each element gets the atoms below it."""
    P.require_polytopal("label_by_atoms")
    atoms = [a for a in P.by_rank() if P.ranks[a] == 0]
    faces = []
    for a in range(len(P)):
        if P.ranks[a] >= 0:
            faces.append(([k for k, v in enumerate(atoms) if (P.down[a] >> v) & 1], P.ranks[a]))
    return build_from_faces(faces)


# -- isomorphism ----------------------------------------------------------


def _neighbours(P: GradedPoset):
    ups = [[] for _ in range(len(P))]
    downs = [[] for _ in range(len(P))]
    for a, b in P.covers:
        ups[a].append(b)
        downs[b].append(a)
    return ups, downs


def _refine_colours(P: GradedPoset, Q: GradedPoset):
    """Joint colour refinement over the two Hasse diagrams; returns colour lists."""
    nbr = [_neighbours(P), _neighbours(Q)]
    posets = [P, Q]
    cols = []
    for X, (ups, downs) in zip(posets, nbr):
        lo = X.min_rank
        cols.append(
            [
                (X.ranks[a] - lo, len(ups[a]), len(downs[a]), X.up[a].bit_count(), X.down[a].bit_count())
                for a in range(len(X))
            ]
        )
    palette: dict = {}
    cols = [[palette.setdefault(c, len(palette)) for c in cs] for cs in cols]
    classes = len(palette)
    while True:
        palette = {}
        new = []
        for cs, (ups, downs) in zip(cols, nbr):
            new.append(
                [
                    palette.setdefault(
                        (cs[a], tuple(sorted(cs[b] for b in ups[a])), tuple(sorted(cs[b] for b in downs[a]))),
                        len(palette),
                    )
                    for a in range(len(cs))
                ]
            )
        cols = new
        if len(palette) == classes:
            return cols
        classes = len(palette)


def are_isomorphic(P: GradedPoset, Q: GradedPoset, cap: int = DEFAULT_ISO_CAP) -> dict[int, int] | None:
    """An order isomorphism ``P -> Q`` as ``{p: q}``, or ``None``.

    Ranks must agree up to one common shift, so the point lattice (ranks -1
    and 0) is isomorphic to the two-element chain on ranks 0 and 1.

    Exact backtracking, pruned by colour refinement of the Hasse diagrams
    and by growing the assignment along cover edges.
    """
    if len(P) != len(Q):
        return None
    if max(len(P), len(Q)) > cap:
        raise IsomorphismCapExceeded(f"{len(P)} elements exceeds the isomorphism search cap of {cap}")
    if not len(P):
        return {}
    if P.f_vector().counts != Q.f_vector().counts or len(P.covers) != len(Q.covers):
        return None
    cp, cq = _refine_colours(P, Q)
    if Counter(cp) != Counter(cq):
        return None

    p_ups, p_downs = _neighbours(P)
    q_ups, q_downs = _neighbours(Q)
    class_size = Counter(cp)
    by_colour: dict[int, list[int]] = {}
    for q, c in enumerate(cq):
        by_colour.setdefault(c, []).append(q)

    # Search order: start at the rarest colour, then always take the element
    # with most already-placed cover neighbours, preferring recent ones.
    n = len(P)
    placed_at = [-1] * n
    order = []
    start = min(range(n), key=lambda a: (class_size[cp[a]], P.ranks[a], a))
    score = [0] * n
    recent = [-1] * n
    current = start
    for step in range(n):
        placed_at[current] = step
        order.append(current)
        for b in p_ups[current] + p_downs[current]:
            score[b] += 1
            recent[b] = step
        rest = [a for a in range(n) if placed_at[a] < 0]
        if not rest:
            break
        current = max(rest, key=lambda a: (score[a], recent[a], -class_size[cp[a]], -a))

    mapping: dict[int, int] = {}
    used = [False] * n

    def candidates(p: int):
        anchor = next((x for x in p_downs[p] if x in mapping), None)
        if anchor is not None:
            pool = q_ups[mapping[anchor]]
        else:
            anchor = next((x for x in p_ups[p] if x in mapping), None)
            pool = q_downs[mapping[anchor]] if anchor is not None else by_colour[cp[p]]
        return [q for q in pool if not used[q] and cq[q] == cp[p]]

    def consistent(p: int, q: int) -> bool:
        for x, y in mapping.items():
            if ((P.up[x] >> p) & 1) != ((Q.up[y] >> q) & 1):
                return False
            if ((P.up[p] >> x) & 1) != ((Q.up[q] >> y) & 1):
                return False
        return True

    def extend(k: int) -> bool:
        if k == n:
            return True
        p = order[k]
        for q in candidates(p):
            if consistent(p, q):
                mapping[p] = q
                used[q] = True
                if extend(k + 1):
                    return True
                del mapping[p]
                used[q] = False
        return False

    limit = sys.getrecursionlimit()
    if limit < n + 100:
        sys.setrecursionlimit(n + 100)
    try:
        found = extend(0)
    finally:
        sys.setrecursionlimit(limit)
    return dict(sorted(mapping.items())) if found else None
