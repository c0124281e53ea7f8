"""Conic-bundle models: Klein-four actions, exceptional bundles, Hirzebruch surfaces.

The central object is a rational surface fibered in conics over P^1,
presented by its fibered Picard marking (see ``picard.FiberedMarking``)
together with involutions that act trivially on the base and swap the two
components of prescribed singular fibers.  For a fiberwise involution
swapping the fibers over a set J of base points with |J| = 2a, the action
on the lattice is forced by preserving the form, K and f:

* ``E_j -> f - E_j`` for j in J, other fiber components fixed,
* ``E_0 -> a L - (a - 1) E_0 - sum_J E_j``,
* ``L -> (a + 1) L - a E_0 - sum_J E_j``.

The branch data of a Klein four-group is a ramification triplet (module
``square_class``); the three involutions built from its sets multiply as
sigma_1 sigma_2 = sigma_3 because every point lies in exactly two sets.

Two explicit plane constructions produce such bundles with a certificate
of (-2)-sections: four general lines projected from a general center
(profile (2, 2, 2), four pairwise disjoint sections), and three lines plus
a conic in the incidence of the classical quintic construction (profile
(2, 2, 3), four sections forming two crossing pairs).  Note the (2, 2, 3)
sections cannot be pairwise disjoint: summing four disjoint (-2)-sections
would give a class -2K + b f with square 4 + 8b = -8, which has no integer
solution, while the (2, 2, 2) case takes b = -2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import NamedTuple

from . import intlinalg as la
from .errors import (
    AlignmentViolation,
    DegenerateConfiguration,
    OddDelta,
    QOnConfiguration,
    TooFew,
)
from .geometry import (
    Conic,
    Line,
    P1Point,
    P2Point,
    SamePoint,
    intersect_line_conic,
    line_through,
    lines_meet,
    project_from,
)
from .intlinalg import Mat
from .picard import (
    BlowupLattice,
    DivisorClass,
    FiberedMarking,
    LatticeAction,
    adjunction_genus,
    intersect,
    validate_action,
    verify_mori_fibration,
)
from .square_class import RamificationTriplet, stabilizer, validate_triplet

# ---------------------------------------------------------------------------
# Hirzebruch surfaces (the rank-2 models without singular fibers)


@dataclass(frozen=True)
class HirzebruchModel:
    """The surface F_n with its ruling; automorphisms never mix the data.

    ``structure_tag`` is the symbolic shape of the automorphism group,
    a vector-group extension of GL_2 / mu_n.
    """

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("Hirzebruch index must be >= 0")

    @property
    def structure_tag(self) -> str:
        return f"C^{self.n + 1} : (GL(2,C)/mu_{self.n})"

    @property
    def k_squared(self) -> int:
        return 8


# ---------------------------------------------------------------------------
# fiberwise involutions on a marked lattice


def involution_matrix(marking: FiberedMarking, swapped: tuple[int, ...]) -> Mat:
    """The lattice action of the involution swapping the listed fibers.

    ``swapped`` holds 1-based fiber indices; its size must be even (an
    involution of the generic fiber ramifies over an even set).  The
    returned matrix is validated as an isometry fixing K.
    """
    idx = sorted(set(swapped))
    if len(idx) % 2 != 0:
        raise ValueError(f"a fiberwise involution swaps an even number of fibers, got {len(idx)}")
    if idx and not 1 <= idx[0] <= idx[-1] <= marking.k:
        raise ValueError(f"fiber indices {idx} out of range 1..{marking.k}")
    a = len(idx) // 2
    lat = marking.lattice
    ell = lat.line_class()
    e0 = lat.exceptional_class(1)
    swapped_sum = lat.zero()
    for j in idx:
        swapped_sum = swapped_sum + marking.fiber_component(j)

    images = [
        (a + 1) * ell - a * e0 - swapped_sum,       # image of L
        a * ell - (a - 1) * e0 - swapped_sum,       # image of E_0
    ]
    for j in range(1, marking.k + 1):
        ej = marking.fiber_component(j)
        if j in idx:
            images.append(ell - e0 - ej)
        else:
            images.append(ej)
    matrix = la.transpose(la.freeze([d.coeffs for d in images]))
    return validate_action(lat, matrix)


class FiberInfo(NamedTuple):
    """One singular fiber: its index, base point, and which involutions swap it."""

    index: int
    base_point: P1Point
    swapped_by: tuple[int, int]


@dataclass(frozen=True)
class RealizationCertificate:
    """Witness that a branch triplet is realized by an actual surface.

    Holds the classes of four (-2)-sections permuted transitively by the
    Klein four-group.  For the four-line construction they are pairwise
    disjoint; for the three-lines-and-conic construction they form two
    crossing pairs (see the module docstring for why disjointness is
    impossible there).
    """

    source: str  # "four-lines" | "three-lines-conic"
    section_classes: tuple[DivisorClass, DivisorClass, DivisorClass, DivisorClass]
    intersection_matrix: tuple[tuple[int, ...], ...]

    @property
    def pairwise_disjoint(self) -> bool:
        return all(
            self.intersection_matrix[i][j] == 0
            for i in range(4) for j in range(4) if i != j)


@dataclass(frozen=True)
class Z22BundleModel:
    """A conic bundle with a Klein four-group acting trivially on the base."""

    marking: FiberedMarking
    triplet: RamificationTriplet
    generators: tuple[Mat, Mat, Mat]
    fibers: tuple[FiberInfo, ...]
    certificate: RealizationCertificate | None = None

    @property
    def k(self) -> int:
        return self.marking.k

    @property
    def profile(self) -> tuple[int, int, int]:
        return self.triplet.profile

    @property
    def k_squared(self) -> int:
        return 8 - self.k

    def action(self) -> LatticeAction:
        return LatticeAction(self.marking.lattice, self.generators[:2])


def z22_from_triplet(
    triplet: RamificationTriplet,
    certificate: RealizationCertificate | None = None,
) -> Z22BundleModel:
    """Build the marked lattice model of a branch triplet.

    The support points become the singular fibers (in canonical order) and
    each branch set yields the involution swapping exactly its fibers.
    Construction invariants (involutivity, sigma_1 sigma_2 = sigma_3, the
    invariant lattice being Z K + Z f) are asserted on the way out.
    """
    support = triplet.support
    marking = FiberedMarking(BlowupLattice(len(support) + 1), support)
    gens = tuple(
        involution_matrix(
            marking, tuple(marking.fiber_index_of(p) for p in branch_set))
        for branch_set in triplet.sets
    )
    ident = la.identity(marking.lattice.rank)
    assert all(la.mat_mul(g, g) == ident for g in gens)
    assert la.mat_mul(gens[0], gens[1]) == gens[2]
    fibers = tuple(
        FiberInfo(j, p, triplet.membership(p))
        for j, p in enumerate(support, start=1)
    )
    model = Z22BundleModel(marking, triplet, gens, fibers, certificate)
    verdict = verify_mori_fibration(marking.lattice, model.action(), marking)
    assert verdict.kind == "conic_bundle_over_p1", verdict
    if certificate is not None:
        _check_certificate(model, certificate)
    return model


def _check_certificate(model: Z22BundleModel, cert: RealizationCertificate) -> None:
    lat = model.marking.lattice
    f = model.marking.fiber_class
    secs = cert.section_classes
    if len(secs) != 4:
        raise ValueError("a realization certificate lists exactly four sections")
    for s in secs:
        if intersect(lat, s, s) != -2 or intersect(lat, s, f) != 1:
            raise ValueError(f"{s} is not a (-2)-section")
    matrix = tuple(
        tuple(intersect(lat, s1, s2) for s2 in secs) for s1 in secs)
    if matrix != cert.intersection_matrix:
        raise ValueError("stored intersection matrix does not match the classes")
    # the Klein four-group must permute the four classes transitively
    index = {s: i for i, s in enumerate(secs)}
    perms = []
    for g in model.generators:
        images = [DivisorClass(la.mat_vec(g, s.coeffs)) for s in secs]
        if any(img not in index for img in images):
            raise ValueError("the involutions do not permute the certificate sections")
        perms.append(tuple(index[img] for img in images))
    reached = {0}
    while True:
        grown = reached | {p[i] for p in perms for i in reached}
        if grown == reached:
            break
        reached = grown
    if reached != {0, 1, 2, 3}:
        raise ValueError("the certificate sections are not a single orbit")
    if cert.source == "four-lines":
        if not cert.pairwise_disjoint:
            raise ValueError("four-line certificates must have disjoint sections")
    elif cert.source == "three-lines-conic":
        crossings = sorted(
            tuple(sorted((i, j)))
            for i in range(4) for j in range(i + 1, 4)
            if matrix[i][j] != 0)
        flat = [i for pair in crossings for i in pair]
        if len(crossings) != 2 or sorted(flat) != [0, 1, 2, 3] or any(
                matrix[i][j] != 1 for i, j in crossings):
            raise ValueError(
                "three-lines-conic certificates must have exactly two crossing pairs")
    else:
        raise ValueError(f"unknown certificate source {cert.source!r}")


class FixedCurve(NamedTuple):
    """The fixed curve of one involution: class, self-intersection, genus."""

    divisor: DivisorClass
    self_intersection: int
    genus: int


def fixed_curve_class(model: Z22BundleModel, i: int) -> FixedCurve:
    """Fixed curve of sigma_i (1-based): a double cover of P^1 over A_i.

    Its class is ``-K + (a_i - 2) f``; adjunction gives genus ``a_i - 1``
    and the self-intersection is ``4 a_i - k``.
    """
    if not 1 <= i <= 3:
        raise ValueError("involution index must be 1, 2 or 3")
    a_i = model.profile[i - 1]
    lat = model.marking.lattice
    divisor = -lat.canonical_class + (a_i - 2) * model.marking.fiber_class
    self_int = intersect(lat, divisor, divisor)
    genus = adjunction_genus(lat, divisor)
    assert self_int == 4 * a_i - model.k
    assert genus == a_i - 1
    return FixedCurve(divisor, self_int, genus)


# ---------------------------------------------------------------------------
# del Pezzo decision


@dataclass(frozen=True)
class DelPezzoVerdict:
    kind: str  # "yes" | "no" | "indeterminate"
    reason: str


def del_pezzo_verdict_for_profile(
    profile: tuple[int, int, int], certified: bool = False
) -> DelPezzoVerdict:
    """The purely numerical del Pezzo decision for a branch profile.

    This works on the half-sizes alone, so it also answers for formal
    profiles that no actual triplet realizes (a triplet forces the
    triangle inequality a_3 <= a_1 + a_2; the rule below does not need it).
    """
    a = tuple(sorted(profile))
    if len(a) != 3 or a[0] < 1:
        raise ValueError(f"profile must be three half-sizes >= 1, got {profile}")
    k = sum(a)
    if k >= 8:
        return DelPezzoVerdict("no", f"K^2 = {8 - k} <= 0")
    if k <= 5:
        return DelPezzoVerdict("yes", f"K^2 = {8 - k} >= 3")
    if a[0] == 1:
        return DelPezzoVerdict(
            "no",
            f"the involution with two branch points fixes a rational curve "
            f"of self-intersection {4 - k} <= -2")
    if certified:
        return DelPezzoVerdict(
            "no", "a realized surface here carries four (-2)-sections")
    return DelPezzoVerdict(
        "indeterminate",
        f"profile {a} needs a geometric realization certificate to decide")


def is_del_pezzo_bundle(model: Z22BundleModel) -> DelPezzoVerdict:
    """Decide whether the total space of the bundle is a del Pezzo surface."""
    return del_pezzo_verdict_for_profile(
        model.profile, certified=model.certificate is not None)


# ---------------------------------------------------------------------------
# the two plane constructions


def _distinct(values, error: str) -> None:
    seen = set()
    for v in values:
        if v in seen:
            raise DegenerateConfiguration(error + f" (repeated: {v})")
        seen.add(v)


def build_from_four_lines(lines, center: P2Point) -> Z22BundleModel:
    """The Klein-four conic bundle over the pencil through ``center``.

    Four lines in general position meet in six points; projecting from a
    general center realizes the branch profile (2, 2, 2), each involution
    swapping the fibers over the four double points away from one of the
    three opposite pairs.  The strict transforms of the four lines are
    pairwise disjoint (-2)-sections permuted transitively, and they are
    attached as the realization certificate.
    """
    ls: tuple[Line, ...] = tuple(lines)
    if len(ls) != 4:
        raise DegenerateConfiguration(f"need exactly four lines, got {len(ls)}")
    _distinct(ls, "the four lines must be distinct")
    for l in ls:
        if l.contains(center):
            raise QOnConfiguration(f"center {center} lies on {l}")

    double_points: dict[tuple[int, int], P2Point] = {}
    for i, j in itertools.combinations(range(4), 2):
        double_points[(i, j)] = lines_meet(ls[i], ls[j])
    _distinct(double_points.values(), "three of the lines are concurrent")

    proj = {pair: project_from(center, pt) for pair, pt in double_points.items()}
    _distinct(
        proj.values(),
        "the center sees two double points in the same direction")

    pairings = (
        ((0, 1), (2, 3)),
        ((0, 2), (1, 3)),
        ((0, 3), (1, 2)),
    )
    branch_sets = []
    for m, pairing in enumerate(pairings):
        others = [proj[p] for p in double_points if p not in pairing]
        branch_sets.append(tuple(others))
    triplet = validate_triplet(*branch_sets)

    support = triplet.support
    marking = FiberedMarking(BlowupLattice(len(support) + 1), support)
    sections = []
    for i in range(4):
        coeffs = [1] + [0] * marking.lattice.r
        for pair, pt in double_points.items():
            if i in pair:
                coeffs[1 + marking.fiber_index_of(proj[pair])] = -1
        sections.append(DivisorClass(tuple(coeffs)))
    lat = marking.lattice
    cert = RealizationCertificate(
        "four-lines",
        tuple(sections),
        tuple(tuple(intersect(lat, s1, s2) for s2 in sections) for s1 in sections),
    )
    return z22_from_triplet(triplet, cert)


def build_from_three_lines_conic(
    lines, conic: Conic, d1: P2Point, d2: P2Point
) -> Z22BundleModel:
    """The profile (2, 2, 3) bundle from a conic and three transverse lines.

    The incidence required: ``d1`` is the intersection of two of the lines
    (and is off the conic), ``d2`` lies on the third line and on the conic.
    The projection center is the second intersection of the line ``d1 d2``
    with the conic; seven points are blown up (the remaining intersections
    of the configuration), giving seven singular fibers and the sections
    certificate with two crossing pairs.
    """
    ls: tuple[Line, ...] = tuple(lines)
    if len(ls) != 3:
        raise DegenerateConfiguration(f"need exactly three lines, got {len(ls)}")
    _distinct(ls, "the three lines must be distinct")
    if not conic.is_smooth():
        raise DegenerateConfiguration("the conic must be smooth")

    on = [l.contains(d1) for l in ls]
    if sum(on) != 2:
        raise DegenerateConfiguration(
            f"d1 = {d1} must lie on exactly two of the lines, lies on {sum(on)}")
    ia, ib = (i for i in range(3) if on[i])
    ic = next(i for i in range(3) if not on[i])
    la_, lb_, lc_ = ls[ia], ls[ib], ls[ic]
    if conic.contains(d1):
        raise DegenerateConfiguration("d1 must be off the conic")
    if not lc_.contains(d2):
        raise DegenerateConfiguration("d2 must lie on the third line")
    if not conic.contains(d2):
        raise DegenerateConfiguration("d2 must lie on the conic")

    a3 = lines_meet(la_, lc_)
    b3 = lines_meet(lb_, lc_)
    _distinct((d1, a3, b3), "the three lines are concurrent")
    for name, pt in (("La.Lc", a3), ("Lb.Lc", b3)):
        if conic.contains(pt):
            raise DegenerateConfiguration(
                f"the double point {name} = {pt} lies on the conic")

    def conic_chord(line: Line, label: str) -> tuple[P2Point, P2Point]:
        pts = intersect_line_conic(line, conic)
        if len(pts) != 2:
            raise DegenerateConfiguration(f"{label} is tangent to the conic")
        return pts

    a1, a2 = conic_chord(la_, "the first line through d1")
    b1, b2 = conic_chord(lb_, "the second line through d1")
    c_pts = conic_chord(lc_, "the third line")
    if d2 not in c_pts:
        raise DegenerateConfiguration("d2 is not where the third line meets the conic")
    c = next(p for p in c_pts if p != d2)

    blown = (a1, a2, a3, b1, b2, b3, c)
    _distinct(blown + (d1, d2), "the configuration points must be distinct")

    try:
        axis = line_through(d1, d2)
    except SamePoint:
        raise DegenerateConfiguration("d1 and d2 coincide") from None
    q_pts = intersect_line_conic(axis, conic)
    if len(q_pts) != 2:
        raise DegenerateConfiguration("the line d1 d2 is tangent to the conic")
    center = next(p for p in q_pts if p != d2)
    if center in blown or center == d1:
        raise DegenerateConfiguration(
            "the projection center collides with a configuration point")
    for l in ls:
        if l.contains(center):
            raise DegenerateConfiguration(
                "the projection center lies on one of the lines")

    proj = {pt: project_from(center, pt) for pt in blown}
    fiber_of_d = project_from(center, d1)
    assert fiber_of_d == project_from(center, d2)
    if len(set(proj.values())) != 7 or fiber_of_d in proj.values():
        raise AlignmentViolation(
            "blown-up points must project to seven fibers distinct from the d1 d2 fiber")

    branch_a = (proj[a1], proj[a2], proj[b3], proj[c])
    branch_b = (proj[b1], proj[b2], proj[a3], proj[c])
    branch_c = (proj[a1], proj[a2], proj[a3], proj[b1], proj[b2], proj[b3])
    triplet = validate_triplet(branch_a, branch_b, branch_c)

    marking = FiberedMarking(BlowupLattice(8), triplet.support)

    def section(mults: dict[P2Point, int], degree: int, through_center: bool) -> DivisorClass:
        coeffs = [degree] + [0] * marking.lattice.r
        if through_center:
            coeffs[1] = -1
        for pt, mult in mults.items():
            coeffs[1 + marking.fiber_index_of(proj[pt])] = -mult
        return DivisorClass(tuple(coeffs))

    sections = (
        section({a1: 1, a2: 1, a3: 1}, 1, False),
        section({b1: 1, b2: 1, b3: 1}, 1, False),
        section({a3: 1, b3: 1, c: 1}, 1, False),
        section({a1: 1, a2: 1, b1: 1, b2: 1, c: 1}, 2, True),
    )
    lat = marking.lattice
    cert = RealizationCertificate(
        "three-lines-conic",
        sections,
        tuple(tuple(intersect(lat, s1, s2) for s2 in sections) for s1 in sections),
    )
    return z22_from_triplet(triplet, cert)


# ---------------------------------------------------------------------------
# the degree 5 interior case: the de Jonquieres involution on four points


class JonquieresInvolution(NamedTuple):
    """The involution fixing a pencil of conics through four points.

    ``generator`` acts in the standard basis (L, E_0, E_1..E_4);
    ``section_first`` is the same map written in the basis
    (E_0, E_1..E_4, L) used by classical references.
    """

    generator: Mat
    section_first: Mat


def jonquieres_involution_matrix(marking: FiberedMarking) -> JonquieresInvolution:
    """The fiberwise involution swapping all four singular fibers (a = 2)."""
    if marking.k != 4:
        raise ValueError(f"this involution lives on a four-fiber marking, got k={marking.k}")
    gen = involution_matrix(marking, (1, 2, 3, 4))
    n = marking.lattice.rank
    order = [1, 2, 3, 4, 5, 0]
    perm = tuple(
        tuple(1 if j == order[i] else 0 for j in range(n)) for i in range(n))
    section_first = la.mat_mul(la.mat_mul(perm, gen), la.transpose(perm))
    return JonquieresInvolution(gen, section_first)


# ---------------------------------------------------------------------------
# exceptional bundles


@dataclass(frozen=True)
class ExceptionalAutDescriptor:
    """Shape of the automorphism group of an exceptional bundle.

    The kernel of the action on the base is the fiberwise torus extended
    by the component swap; the image in PGL(2, Q) is the stabilizer of the
    branch set.  For 2n >= 4 this describes the full automorphism group of
    the surface; for 2n = 2 the surface is the del Pezzo of degree 6 whose
    automorphisms do not all preserve the ruling.
    """

    kernel_tag: str
    quotient_stabilizer: tuple | None
    equals_full_automorphisms: bool


@dataclass(frozen=True)
class ExceptionalBundleModel:
    """The minimal bundle with two (-n)-sections swapped by an involution."""

    marking: FiberedMarking
    delta: tuple[P1Point, ...]
    swap: Mat
    section_classes: tuple[DivisorClass, DivisorClass]
    aut: ExceptionalAutDescriptor

    @property
    def n(self) -> int:
        return len(self.delta) // 2

    @property
    def k_squared(self) -> int:
        return 8 - len(self.delta)

    def action(self) -> LatticeAction:
        return LatticeAction(self.marking.lattice, (self.swap,))


def exceptional_from_delta(delta) -> ExceptionalBundleModel:
    """Build the exceptional bundle branched over the given point set.

    The involution swaps the components of every singular fiber, so the
    eigenvalues of the swap are +1 twice (on K and f) and -1 on the 2n
    classes ``f - 2 E_j``; the two sections ``L - E_1 - ... - E_{n+1}`` and
    ``E_0 - E_{n+2} - ... - E_{2n}`` are disjoint of square -n and swapped.
    """
    pts = tuple(sorted(set(delta), key=P1Point.sort_key))
    if len(pts) < 2:
        raise TooFew(f"an exceptional bundle needs at least two branch points, got {len(pts)}")
    if len(pts) % 2 != 0:
        raise OddDelta(f"branch set must have even size, got {len(pts)}")
    n = len(pts) // 2
    marking = FiberedMarking(BlowupLattice(2 * n + 1), pts)
    swap = involution_matrix(marking, tuple(range(1, 2 * n + 1)))
    lat = marking.lattice

    f = marking.fiber_class
    k = lat.canonical_class
    assert la.mat_vec(swap, k.coeffs) == k.coeffs
    assert la.mat_vec(swap, f.coeffs) == f.coeffs
    for j in range(1, 2 * n + 1):
        v = f - 2 * marking.fiber_component(j)
        assert la.mat_vec(swap, v.coeffs) == (-v).coeffs

    s1 = lat.line_class()
    for j in range(1, n + 2):
        s1 = s1 - marking.fiber_component(j)
    s2 = lat.exceptional_class(1)
    for j in range(n + 2, 2 * n + 1):
        s2 = s2 - marking.fiber_component(j)
    assert intersect(lat, s1, s1) == -n and intersect(lat, s2, s2) == -n
    assert intersect(lat, s1, s2) == 0
    assert DivisorClass(la.mat_vec(swap, s1.coeffs)) == s2

    if n >= 2:
        aut = ExceptionalAutDescriptor(
            kernel_tag="C^* : Z/2",
            quotient_stabilizer=stabilizer(pts),
            equals_full_automorphisms=True,
        )
    else:
        aut = ExceptionalAutDescriptor(
            kernel_tag="C^* : Z/2",
            quotient_stabilizer=None,
            equals_full_automorphisms=False,
        )
    return ExceptionalBundleModel(marking, pts, swap, (s1, s2), aut)


# ---------------------------------------------------------------------------
# numerical solvers


class ObstructionSolution(NamedTuple):
    """One solution of the equivariant contraction constraints.

    ``orbit_size`` disjoint (-1)-curves contracted in a single orbit give
    a new fibration pulled back along ``-a K + b f``; the constraints are
    ``a (orbit_size + 2 b) = orbit_size`` with ``a < 0`` and integer
    ``K^2 = (2 b - orbit_size) / a`` for the starting surface.
    """

    orbit_size: int
    a: int
    b: int
    k_squared: int


_ALLOWED_ORBITS = (1, 2, 4)


def minimality_obstruction_solver(
    k: int | None = None, orbit_sizes=(1, 2, 4)
) -> tuple[ObstructionSolution, ...]:
    """Solve the contraction constraints, optionally filtered to one bundle.

    With ``k`` given, keeps the solutions whose ``k_squared`` equals
    ``8 - k``; a nonempty answer means a numerical obstruction to
    minimality exists (the converse needs the orbit computation).
    """
    for l in orbit_sizes:
        if l not in _ALLOWED_ORBITS:
            raise ValueError(f"orbit sizes must be among {_ALLOWED_ORBITS}, got {l}")
    out = []
    for l in sorted(set(orbit_sizes)):
        for a in range(-l, 0):
            if l % a != 0:
                continue
            twice_b = l // a - l
            if twice_b % 2 != 0:
                continue
            b = twice_b // 2
            q, rem = divmod(2 * b - l, a)
            if rem != 0:
                continue
            assert a * (l + 2 * b) == l
            out.append(ObstructionSolution(l, a, b, q))
    if k is not None:
        out = [s for s in out if s.k_squared == 8 - k]
    return tuple(sorted(out))


def second_fibration_solver(k_squared: int):
    """A second fibration class ``-a K + b f`` with the right numerics.

    Solved from ``a K^2 = 4`` with ``b = -1``; returns the pair ``(a, b)``,
    the sentinel string ``"p1xp1"`` for ``K^2 = 8`` (where the second
    ruling exists for the trivial reason), or None.
    """
    if k_squared == 8:
        return "p1xp1"
    if k_squared > 0 and 4 % k_squared == 0:
        return (4 // k_squared, -1)
    return None


# ---------------------------------------------------------------------------
# Halphen: the K^2 = 0 boundary profile


@dataclass(frozen=True)
class HalphenReport:
    """The (2, 2, 4) boundary case: elliptic fixed curves, K^2 = 0.

    Here the full automorphism group of the surface is not an algebraic
    group, but the subgroup preserving the fibration is, and it is maximal
    (the last family of the classification).
    """

    k_squared: int
    fixed_curve: DivisorClass
    genus: int
    note: str


def halphen_check(triplet: RamificationTriplet) -> HalphenReport | None:
    """Report the special structure for profile (2, 2, 4), else None.

    The profile forces A_3 = A_1 + A_2 disjointly, k = 8, K^2 = 0, and the
    involutions with four branch points fix curves of class -K, genus one.
    """
    if triplet.profile != (2, 2, 4):
        return None
    model = z22_from_triplet(triplet)
    assert model.k_squared == 0
    curve = fixed_curve_class(model, 1)
    assert curve.divisor == -model.marking.lattice.canonical_class
    assert curve.genus == 1 and curve.self_intersection == 0
    return HalphenReport(
        k_squared=0,
        fixed_curve=curve.divisor,
        genus=1,
        note=("the full automorphism group of the surface is not algebraic; "
              "the subgroup preserving the fibration is, and it is maximal"),
    )
