"""Picard lattices of blowups of the plane and group actions on them.

The lattice of the blowup of P^2 at r points has the orthogonal basis
``(L, E_1, ..., E_r)`` with ``L^2 = 1`` and ``E_i^2 = -1``; the canonical
class is ``K = -3L + sum E_i``.  Divisor classes are integer coefficient
vectors in that basis.  Group actions are finite sets of integer matrices
preserving the intersection form and fixing K.

The fibered variant used by the conic-bundle constructions relabels the
first exceptional class as ``E_0`` (the blown-up projection center) and
carries the fiber class ``f = L - E_0`` together with the base point of
P^1 under each remaining ``E_j``.

All sublattice computations run over Z with unimodular row reduction, so
invariant sublattices come out saturated and bases are canonical (Hermite
normal form).  The number of blowups is capped at 13, enough for an
exceptional bundle with twelve singular fibers; the expensive operation,
(-1)-class enumeration, has its own cap at r = 8.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

from . import intlinalg as la
from .errors import (
    DimensionMismatch,
    GroupClosureCapExceeded,
    MovesCanonicalClass,
    NonIntegralGenus,
    NotClosedUnderAction,
    NotIsometry,
    UnsupportedRank,
)
from .geometry import P1Point
from .intlinalg import Mat, Vec

MAX_BLOWUPS = 13


@dataclass(frozen=True)
class DivisorClass:
    """An integer divisor class; ``coeffs[0]`` is the L coefficient."""

    coeffs: Vec

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def of(cls, *coeffs: int) -> "DivisorClass":
        return cls(tuple(coeffs))

    def __add__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __sub__(self, other: "DivisorClass") -> "DivisorClass":
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs, strict=True)))

    def __neg__(self) -> "DivisorClass":
        return DivisorClass(tuple(-a for a in self.coeffs))

    def __rmul__(self, n: int) -> "DivisorClass":
        return DivisorClass(tuple(n * a for a in self.coeffs))

    def __lt__(self, other: "DivisorClass") -> bool:
        return self.coeffs < other.coeffs

    def __repr__(self) -> str:
        return f"D{self.coeffs}"


@dataclass(frozen=True)
class BlowupLattice:
    """The Picard lattice of P^2 blown up at ``r`` distinct points."""

    r: int

    def __post_init__(self) -> None:
        if not 0 <= self.r <= MAX_BLOWUPS:
            raise UnsupportedRank(f"blowups of the plane at up to {MAX_BLOWUPS} points only, got r={self.r}")

    @property
    def rank(self) -> int:
        return self.r + 1

    @property
    def degree(self) -> int:
        """K^2 = 9 - r."""
        return 9 - self.r

    @property
    def canonical_class(self) -> DivisorClass:
        return DivisorClass((-3,) + (1,) * self.r)

    def line_class(self) -> DivisorClass:
        return DivisorClass((1,) + (0,) * self.r)

    def exceptional_class(self, i: int) -> DivisorClass:
        """E_i for 1 <= i <= r."""
        if not 1 <= i <= self.r:
            raise DimensionMismatch(f"no exceptional class E_{i} on a lattice with r={self.r}")
        coeffs = [0] * self.rank
        coeffs[i] = 1
        return DivisorClass(tuple(coeffs))

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * self.rank)


def _check_vector(lattice: BlowupLattice, d: DivisorClass) -> Vec:
    if len(d.coeffs) != lattice.rank:
        raise DimensionMismatch(
            f"divisor has {len(d.coeffs)} coordinates, lattice rank is {lattice.rank}")
    return d.coeffs


def intersect(lattice: BlowupLattice, d1: DivisorClass, d2: DivisorClass) -> int:
    """The intersection number in the diagonal form (1, -1, ..., -1)."""
    v = _check_vector(lattice, d1)
    w = _check_vector(lattice, d2)
    return v[0] * w[0] - sum(a * b for a, b in zip(v[1:], w[1:]))


def adjunction_genus(lattice: BlowupLattice, d: DivisorClass) -> int:
    """The arithmetic genus ``1 + (D^2 + D.K) / 2``."""
    self_int = intersect(lattice, d, d)
    with_k = intersect(lattice, d, lattice.canonical_class)
    if (self_int + with_k) % 2 != 0:
        raise NonIntegralGenus(f"D^2 + D.K = {self_int + with_k} is odd for {d}")
    return 1 + (self_int + with_k) // 2


def enumerate_minus_one_classes(lattice: BlowupLattice) -> tuple[DivisorClass, ...]:
    """All classes with ``D^2 = D.K = -1``, sorted, for ``1 <= r <= 8``.

    Writing ``D = d L - sum m_i E_i`` the two conditions say
    ``d^2 - sum m_i^2 = -1`` and ``3d - sum m_i = 1``.  Cauchy-Schwarz on
    the multiplicity vector gives ``(3d - 1)^2 <= r (d^2 + 1)``; for
    ``r <= 8`` that means ``-1 <= d <= 7``, and ``d = 7`` forces all eight
    multiplicities equal to ``20/8``, which is not an integer, so ``d <= 6``
    is sharp.  The search below still scans ``d`` up to 7; the top value
    contributes nothing, which the tests assert.
    """
    r = lattice.r
    if not 1 <= r <= 8:
        raise UnsupportedRank(f"(-1)-class enumeration supports 1 <= r <= 8, got r={r}")

    found: list[DivisorClass] = []

    def extend(prefix: list[int], remaining: int, lin: int, quad: int) -> None:
        # need sum of `remaining` ints equal to lin, sum of squares quad
        if remaining == 0:
            if lin == 0 and quad == 0:
                found.append(DivisorClass((prefix[0],) + tuple(-m for m in prefix[1:])))
            return
        if quad < 0 or lin * lin > remaining * quad:
            return
        bound = math.isqrt(quad)
        for m in range(-bound, bound + 1):
            extend(prefix + [m], remaining - 1, lin - m, quad - m * m)

    for d in range(-1, 8):
        # multiplicities m_i satisfy sum m_i = 3d - 1, sum m_i^2 = d^2 + 1
        extend([d], r, 3 * d - 1, d * d + 1)
    return tuple(sorted(found))


def validate_action(lattice: BlowupLattice, matrix: Mat) -> Mat:
    """Check that a matrix is an isometry fixing K; returns it frozen.

    The matrix acts on coefficient columns: ``D -> M @ D``.
    """
    m = la.freeze(matrix)
    n = lattice.rank
    if len(m) != n or any(len(row) != n for row in m):
        raise DimensionMismatch(f"action matrix must be {n} x {n}")
    gram = tuple(
        tuple((1 if i == 0 else -1) if i == j else 0 for j in range(n))
        for i in range(n)
    )
    if la.mat_mul(la.mat_mul(la.transpose(m), gram), m) != gram:
        raise NotIsometry("matrix does not preserve the intersection form")
    k = lattice.canonical_class.coeffs
    if la.mat_vec(m, k) != k:
        raise MovesCanonicalClass("matrix moves the canonical class")
    return m


def reflection_matrix(lattice: BlowupLattice, root: DivisorClass) -> Mat:
    """The isometry ``x -> x + (x . root) root`` for a root of square -2.

    Reflections in (-2)-classes orthogonal to K generate the Weyl group of
    the lattice; products of them are the standard way to build actions.
    """
    square = intersect(lattice, root, root)
    if square != -2:
        raise NotIsometry(f"reflection needs a class of square -2, got {square}")
    if intersect(lattice, root, lattice.canonical_class) != 0:
        raise MovesCanonicalClass("reflection root must be orthogonal to K")
    n = lattice.rank
    cols = []
    for j in range(n):
        e = DivisorClass(tuple(1 if i == j else 0 for i in range(n)))
        cols.append((e + intersect(lattice, e, root) * root).coeffs)
    return validate_action(lattice, la.transpose(la.freeze(cols)))


@dataclass(frozen=True)
class LatticeAction:
    """A finite group of validated isometries, given by generators."""

    lattice: BlowupLattice
    generators: tuple[Mat, ...]
    closure_cap: int = 100_000

    def __post_init__(self) -> None:
        gens = tuple(validate_action(self.lattice, g) for g in self.generators)
        object.__setattr__(self, "generators", gens)

    @classmethod
    def trivial(cls, lattice: BlowupLattice) -> "LatticeAction":
        return cls(lattice, ())

    @cached_property
    def elements(self) -> tuple[Mat, ...]:
        """Every element of the generated group, by breadth-first closure."""
        ident = la.identity(self.lattice.rank)
        seen: dict[Mat, None] = {ident: None}
        frontier = [ident]
        while frontier:
            nxt: list[Mat] = []
            for m in frontier:
                for g in self.generators:
                    prod = la.mat_mul(g, m)
                    if prod not in seen:
                        if len(seen) >= self.closure_cap:
                            raise GroupClosureCapExceeded(
                                f"group closure exceeded {self.closure_cap} elements")
                        seen[prod] = None
                        nxt.append(prod)
            frontier = nxt
        return tuple(seen)

    def order(self) -> int:
        return len(self.elements)

    def apply(self, matrix: Mat, d: DivisorClass) -> DivisorClass:
        return DivisorClass(la.mat_vec(matrix, _check_vector(self.lattice, d)))


def invariant_sublattice(action: LatticeAction) -> tuple[int, tuple[DivisorClass, ...]]:
    """Rank and canonical basis of the fixed sublattice of the action.

    Stacks ``M - I`` over the generators and takes the saturated integer
    kernel, so the answer is the full group-invariant sublattice (fixing
    the generators fixes the group), with a Hermite-form basis.
    """
    n = action.lattice.rank
    if not action.generators:
        basis = la.identity(n)
        return n, tuple(DivisorClass(row) for row in basis)
    rows: list[Vec] = []
    for g in action.generators:
        for i in range(n):
            rows.append(tuple(g[i][j] - (1 if i == j else 0) for j in range(n)))
    kernel = la.kernel_basis(la.freeze(rows))
    return len(kernel), tuple(DivisorClass(row) for row in kernel)


def orbits(
    action: LatticeAction, classes: tuple[DivisorClass, ...] | list[DivisorClass]
) -> tuple[tuple[DivisorClass, ...], ...]:
    """The orbit partition of the given classes, deterministically ordered.

    Orbits are closed under the generators; stepping outside the supplied
    set raises NotClosedUnderAction.  Each orbit is sorted and the orbits
    are listed by their smallest element.
    """
    pool = {d for d in classes}
    for d in pool:
        _check_vector(action.lattice, d)
    remaining = set(pool)
    parts: list[tuple[DivisorClass, ...]] = []
    for seed in sorted(pool):
        if seed not in remaining:
            continue
        orbit = {seed}
        frontier = [seed]
        while frontier:
            nxt = []
            for d in frontier:
                for g in action.generators:
                    image = action.apply(g, d)
                    if image not in pool:
                        raise NotClosedUnderAction(
                            f"{g} maps {d} to {image}, outside the supplied classes")
                    if image not in orbit:
                        orbit.add(image)
                        nxt.append(image)
            frontier = nxt
        remaining -= orbit
        parts.append(tuple(sorted(orbit)))
    return tuple(parts)


def is_pair_minimal(
    lattice: BlowupLattice, action: LatticeAction
) -> tuple[bool, tuple[DivisorClass, ...] | None]:
    """Whether no orbit of (-1)-classes is pairwise disjoint.

    A pairwise disjoint orbit can be contracted equivariantly, so the pair
    (surface, group) is minimal exactly when there is none.  Returns the
    witness orbit when one exists.  For the trivial group every orbit is a
    single (-1)-class, so the answer is always False there.
    """
    classes = enumerate_minus_one_classes(lattice)
    for orbit in orbits(action, classes):
        disjoint = all(
            intersect(lattice, d1, d2) == 0
            for d1, d2 in itertools.combinations(orbit, 2)
        )
        if disjoint:
            return False, orbit
    return True, None


@dataclass(frozen=True)
class FiberedMarking:
    """A blowup lattice marked as a conic bundle over P^1.

    ``lattice.r == k + 1``: the class ``E_0`` is the blown-up projection
    center and ``E_1, ..., E_k`` sit over the distinct base points listed
    in ``base_points``.  The fiber class is ``f = L - E_0``.
    """

    lattice: BlowupLattice
    base_points: tuple[P1Point, ...]

    def __post_init__(self) -> None:
        pts = tuple(self.base_points)
        object.__setattr__(self, "base_points", pts)
        if len(set(pts)) != len(pts):
            raise ValueError("base points of the singular fibers must be distinct")
        if self.lattice.r != len(pts) + 1:
            raise DimensionMismatch(
                f"marking with {len(pts)} fibers needs r = {len(pts) + 1}, lattice has r = {self.lattice.r}")

    @classmethod
    def standard(cls, k: int) -> "FiberedMarking":
        """A marking over the base points 0, 1, ..., k-1."""
        return cls(BlowupLattice(k + 1), tuple(P1Point(j, 1) for j in range(k)))

    @property
    def k(self) -> int:
        return len(self.base_points)

    @property
    def fiber_class(self) -> DivisorClass:
        coeffs = [0] * self.lattice.rank
        coeffs[0] = 1
        coeffs[1] = -1
        return DivisorClass(tuple(coeffs))

    @property
    def section_class(self) -> DivisorClass:
        """E_0, the exceptional curve of the center, a (-1)-section."""
        return self.lattice.exceptional_class(1)

    def fiber_component(self, j: int) -> DivisorClass:
        """E_j over the j-th base point, 1-indexed."""
        if not 1 <= j <= self.k:
            raise DimensionMismatch(f"fiber index {j} out of range 1..{self.k}")
        return self.lattice.exceptional_class(j + 1)

    def fiber_index_of(self, point: P1Point) -> int:
        try:
            return self.base_points.index(point) + 1
        except ValueError:
            raise ValueError(f"{point} is not a marked base point") from None


@dataclass(frozen=True)
class MoriVerdict:
    """Outcome of the Mori-fibration test on an invariant sublattice."""

    kind: str  # "del_pezzo_point" | "conic_bundle_over_p1" | "not_mori"
    invariant_rank: int
    invariant_basis: tuple[DivisorClass, ...]
    reason: str | None = None

    def is_mori(self) -> bool:
        return self.kind != "not_mori"


def verify_mori_fibration(
    lattice: BlowupLattice,
    action: LatticeAction,
    marking: FiberedMarking | None = None,
) -> MoriVerdict:
    """Decide which of the two rank conditions the invariant lattice meets.

    Rank one with K^2 >= 1 is the del Pezzo (point) case.  Rank two is a
    conic bundle over P^1 exactly when a marking is supplied and the
    invariant lattice equals Z K + Z f on the nose, not just up to finite
    index; saturation of the kernel makes that an equality of Hermite bases.
    """
    rank, basis = invariant_sublattice(action)
    if rank == 1:
        if lattice.degree >= 1:
            return MoriVerdict("del_pezzo_point", rank, basis)
        return MoriVerdict(
            "not_mori", rank, basis,
            reason=f"invariant rank 1 but K^2 = {lattice.degree} < 1")
    if rank == 2:
        if marking is None:
            return MoriVerdict(
                "not_mori", rank, basis,
                reason="invariant rank 2 but no fibered marking supplied")
        target = (
            lattice.canonical_class.coeffs,
            marking.fiber_class.coeffs,
        )
        if la.spans_equal(tuple(d.coeffs for d in basis), target):
            return MoriVerdict("conic_bundle_over_p1", rank, basis)
        return MoriVerdict(
            "not_mori", rank, basis,
            reason="invariant rank 2 but the fixed lattice is not Z K + Z f")
    return MoriVerdict(
        "not_mori", rank, basis,
        reason=f"invariant rank {rank} is neither 1 nor 2")
