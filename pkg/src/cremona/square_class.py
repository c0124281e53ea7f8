"""Square classes of rational functions on P^1 and ramification data.

A square-free rational function on P^1, up to squares and scalars, is
determined by its even set of zeros-and-poles of odd order.  We therefore
represent a square class as a finite even-cardinality set of points of
P^1; multiplication of classes is symmetric difference of supports.  The
class of the determinant of a 2-torsion element of PGL(2, Q(x)) is a
conjugacy invariant, and two involutions are conjugate exactly when the
classes agree.

A ramification triplet is the combinatorial core of an action of the
Klein four-group on a conic bundle: three branch sets A_1, A_2, A_3 in
which every point of the union lies in exactly two of the sets, so that
A_3 is the symmetric difference of the other two.  Canonical forms pin
three support points to 0, 1 and infinity and minimize over the choices,
making equality of forms a Q-conjugacy test.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CoverageViolation,
    DuplicatePoint,
    OddCardinality,
    TooFewPoints,
    TooSmall,
)
from .geometry import DegenerateTriple, Mobius, P1Point, mobius_from_triples


def _sorted_distinct(points, what: str) -> tuple[P1Point, ...]:
    pts = tuple(points)
    if len(set(pts)) != len(pts):
        raise DuplicatePoint(f"repeated point in {what}")
    return tuple(sorted(pts, key=P1Point.sort_key))


def _set_key(pts: tuple[P1Point, ...]) -> tuple:
    return (len(pts),) + tuple(p.sort_key() for p in pts)


@dataclass(frozen=True)
class SquareClass:
    """A square class, stored as its sorted even support set."""

    support: tuple[P1Point, ...]

    def __post_init__(self) -> None:
        pts = _sorted_distinct(self.support, "a square class support")
        if len(pts) % 2 != 0:
            raise OddCardinality(f"square class support must have even size, got {len(pts)}")
        object.__setattr__(self, "support", pts)

    @classmethod
    def identity(cls) -> "SquareClass":
        return cls(())

    def is_trivial(self) -> bool:
        return not self.support

    def __mul__(self, other: "SquareClass") -> "SquareClass":
        sym = set(self.support) ^ set(other.support)
        return SquareClass(tuple(sym))

    def __repr__(self) -> str:
        return f"SquareClass{list(self.support)}"


def square_class_of(points) -> SquareClass:
    """The square class with the given support (an even set of points)."""
    return SquareClass(tuple(points))


def multiply(c1: SquareClass, c2: SquareClass) -> SquareClass:
    """Product of square classes: symmetric difference of supports."""
    return c1 * c2


@dataclass(frozen=True)
class InvolutionRep:
    """An involution presented by its determinant square class."""

    determinant_class: SquareClass


def involutions_conjugate(s: InvolutionRep, t: InvolutionRep) -> bool:
    """Conjugacy holds exactly when the determinant classes coincide."""
    return s.determinant_class == t.determinant_class


@dataclass(frozen=True)
class RamificationTriplet:
    """Three even branch sets covering every point exactly twice.

    The sets are stored sorted (each internally, and among themselves by
    size then lexicographic order), so equal triplets compare equal.
    """

    sets: tuple[tuple[P1Point, ...], tuple[P1Point, ...], tuple[P1Point, ...]]

    def __post_init__(self) -> None:
        canon = tuple(sorted(
            (_sorted_distinct(s, "a branch set") for s in self.sets),
            key=_set_key,
        ))
        object.__setattr__(self, "sets", canon)

    @property
    def profile(self) -> tuple[int, int, int]:
        """The half-sizes (a_1 <= a_2 <= a_3)."""
        return tuple(len(s) // 2 for s in self.sets)

    @property
    def k(self) -> int:
        """Number of singular fibers: a_1 + a_2 + a_3 = |union|."""
        return sum(self.profile)

    @property
    def support(self) -> tuple[P1Point, ...]:
        seen = set()
        for s in self.sets:
            seen.update(s)
        return tuple(sorted(seen, key=P1Point.sort_key))

    def membership(self, point: P1Point) -> tuple[int, ...]:
        """1-based indices of the sets containing the point (always two)."""
        return tuple(i + 1 for i, s in enumerate(self.sets) if point in s)

    def sort_key(self) -> tuple:
        return tuple(_set_key(s) for s in self.sets)

    def transformed(self, m: Mobius) -> "RamificationTriplet":
        return RamificationTriplet(tuple(
            tuple(m.apply(p) for p in s) for s in self.sets
        ))


def validate_triplet(a1, a2, a3) -> RamificationTriplet:
    """Check the three branch sets and pack them into a triplet.

    Each set must have at least two points and even size; every point of
    the union must lie in exactly two of the sets (equivalently the third
    set is the symmetric difference of the other two).
    """
    sets = []
    for idx, raw in enumerate((a1, a2, a3), start=1):
        pts = _sorted_distinct(raw, f"branch set {idx}")
        if len(pts) < 2:
            raise TooSmall(f"branch set {idx} has {len(pts)} < 2 points")
        if len(pts) % 2 != 0:
            raise OddCardinality(f"branch set {idx} has odd size {len(pts)}")
        sets.append(pts)
    counts: dict[P1Point, int] = {}
    for s in sets:
        for p in s:
            counts[p] = counts.get(p, 0) + 1
    bad = sorted((p for p, c in counts.items() if c != 2), key=P1Point.sort_key)
    if bad:
        raise CoverageViolation(
            f"points covered a number of times other than twice: {bad}")
    return RamificationTriplet(tuple(tuple(s) for s in sets))


def realizable_profiles(max_k: int) -> tuple[tuple[int, int, int], ...]:
    """All half-size profiles (a1 <= a2 <= a3) with a1+a2+a3 <= max_k.

    A profile is realizable by a triplet exactly when a3 <= a1 + a2: the
    third set is the symmetric difference of the first two, so the pairwise
    overlaps a1+a2-a3, a1+a3-a2 and a2+a3-a1 must all be nonnegative.
    """
    found = []
    for a1 in range(1, max_k + 1):
        for a2 in range(a1, max_k + 1):
            for a3 in range(a2, min(a1 + a2, max_k - a1 - a2) + 1):
                found.append((a1, a2, a3))
    return tuple(sorted(found))


def triplet_from_profile(profile: tuple[int, int, int]) -> RamificationTriplet:
    """A standard triplet with the given profile, supported on 0..k-1.

    The support is split into three blocks of pairwise overlaps; the first
    a1+a2-a3 points lie in sets 1 and 2, the next a1+a3-a2 in sets 1 and 3,
    the last a2+a3-a1 in sets 2 and 3.
    """
    a1, a2, a3 = profile
    m12, m13, m23 = a1 + a2 - a3, a1 + a3 - a2, a2 + a3 - a1
    if min(m12, m13, m23) < 0 or min(profile) < 1:
        raise CoverageViolation(f"profile {profile} is not realizable")
    support = [P1Point(i, 1) for i in range(a1 + a2 + a3)]
    block12 = support[:m12]
    block13 = support[m12:m12 + m13]
    block23 = support[m12 + m13:]
    return validate_triplet(block12 + block13, block12 + block23, block13 + block23)


def stabilizer(points) -> tuple[Mobius, ...]:
    """All Moebius maps over Q preserving the given point set.

    Every symmetry is pinned down by where it sends the first three
    points, so we enumerate ordered triples from the set, build the map
    and keep those that permute the set.  Result is sorted by matrix.
    """
    pts = _sorted_distinct(points, "a stabilizer support")
    if len(pts) < 3:
        raise TooFewPoints(f"stabilizer needs at least 3 points, got {len(pts)}")
    base = pts[:3]
    pset = set(pts)
    kept = []
    for img in itertools.permutations(pts, 3):
        try:
            m = mobius_from_triples(base, img)
        except DegenerateTriple:  # unreachable: permutations are distinct
            continue
        if {m.apply(p) for p in pts} == pset:
            kept.append(m)
    return tuple(sorted(kept, key=Mobius.sort_key))


_PINNED = (P1Point(0, 1), P1Point(1, 1), P1Point(1, 0))


def _canonical_images(support: tuple[P1Point, ...]):
    """Yield the Moebius maps sending some ordered support triple to (0, 1, oo)."""
    if len(support) < 3:
        raise TooFewPoints(
            f"canonical forms need at least 3 support points, got {len(support)}")
    for triple in itertools.permutations(support, 3):
        yield mobius_from_triples(triple, _PINNED)


def triplet_canonical_form(t: RamificationTriplet) -> RamificationTriplet:
    """The least Moebius image of the triplet with three points pinned.

    Minimizes the sorted-triplet key over every map sending an ordered
    triple of support points to (0, 1, infinity).  Two triplets have equal
    canonical forms exactly when a Q-Moebius map carries one to the other.
    """
    best = None
    for m in _canonical_images(t.support):
        cand = t.transformed(m)
        if best is None or cand.sort_key() < best.sort_key():
            best = cand
    return best


def delta_canonical_form(points) -> tuple[P1Point, ...]:
    """The least Moebius image of a point set with three points pinned."""
    pts = _sorted_distinct(points, "a branch set")
    best = None
    for m in _canonical_images(pts):
        cand = tuple(sorted((m.apply(p) for p in pts), key=P1Point.sort_key))
        key = tuple(p.sort_key() for p in cand)
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]
