"""The decision tree from surface descriptors to the eleven maximal families.

A descriptor names a rational surface with a group action in one of four
shapes: a del Pezzo surface (with optional lattice action and table tags),
a Hirzebruch surface, an exceptional bundle model, or a Klein-four conic
bundle model.  ``classify`` walks the published case split and returns a
verdict: a maximal family (1 to 11) with its canonical conjugacy
invariant, a reduction chain proving non-maximality, or Indeterminate
when the combinatorial data genuinely cannot decide (uncertified branch
profiles (2,2,2) and (2,2,3)).

``link_feasibility`` reports, for a maximal verdict, the numerical
obstructions against each of the four types of equivariant Sarkisov
links.  It is an obstruction checker: "possibly open" means the numbers
do not rule the link out, not that a link exists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .bundles import (
    ExceptionalBundleModel,
    Z22BundleModel,
    is_del_pezzo_bundle,
    second_fibration_solver,
)
from .errors import InvalidDescriptor, NotAMoriFibration, NotApplicable
from .picard import LatticeAction, is_pair_minimal
from .square_class import delta_canonical_form, triplet_canonical_form

# closed vocabularies --------------------------------------------------------

ALL_ON_EXCEPTIONAL = "all-on-exceptional"
OFF_EXCEPTIONAL = "off-exceptional"
_FIXED_POINT_REPORTS = (ALL_ON_EXCEPTIONAL, OFF_EXCEPTIONAL)

#: the four normal forms of cubic surfaces with minimal automorphism pairs;
#: the first three are maximal, the last fixes a point off the exceptional
#: curves and reduces
CUBIC_TRIPLE_COVER = "triple-cover"      # W^3+X^3+Y^3+Z^3+alpha XYZ
CUBIC_CLEBSCH = "clebsch"                # W^2X+X^2Y+Y^2Z+Z^2W, Aut = S_5
CUBIC_S4_LAMBDA = "s4-lambda"            # W^3+W(X^2+Y^2+Z^2)+lambda XYZ
CUBIC_EXTRA_FIXED_POINT = "extra-fixed-point"
_CUBIC_TAGS = (CUBIC_TRIPLE_COVER, CUBIC_CLEBSCH, CUBIC_S4_LAMBDA,
               CUBIC_EXTRA_FIXED_POINT)
_CUBIC_SUBFAMILY = {
    CUBIC_TRIPLE_COVER: "8a",
    CUBIC_CLEBSCH: "8b",
    CUBIC_S4_LAMBDA: "8c",
}

#: automorphism table of degree-2 del Pezzo surfaces: order -> structure
DEGREE2_TABLE = {
    336: "2xL2(7)",
    192: "2x(4^2:S3)",
    96: "2x4A4",
    48: "2xS4",
    32: "2xAS16",
    16: "2xD8",
    12: "2xS3",
    8: "2^3",
}
_DEGREE2_LABELS = frozenset(DEGREE2_TABLE.values())


# descriptors ----------------------------------------------------------------


@dataclass(frozen=True)
class DelPezzoDescriptor:
    """A del Pezzo surface of the given degree with optional refinements.

    ``action`` is required for degree 3 (minimality is decided from it).
    ``fixed_point_report`` states whether every fixed point of the group
    lies on an exceptional curve (closed vocabulary, degrees 2 and 3).
    ``cubic_family`` and ``quartic_row`` carry the equation-family tags of
    the degree 3 and degree 2 tables; ``parameter`` is the family
    parameter as a string (exact rational where applicable).
    """

    degree: int
    p1xp1: bool = False
    action: LatticeAction | None = None
    fixed_point_report: str | None = None
    cubic_family: str | None = None
    quartic_row: tuple[int, str] | None = None
    restrictions_satisfied: bool = True
    iso_class_tag: str | None = None
    parameter: str | None = None


@dataclass(frozen=True)
class HirzebruchDescriptor:
    n: int


@dataclass(frozen=True)
class ExceptionalDescriptor:
    model: ExceptionalBundleModel


@dataclass(frozen=True)
class Z22Descriptor:
    model: Z22BundleModel


GSurfaceDescriptor = (
    DelPezzoDescriptor | HirzebruchDescriptor | ExceptionalDescriptor | Z22Descriptor
)


# verdicts -------------------------------------------------------------------


class ChainStep(NamedTuple):
    """One move of a reduction chain.

    ``k_squared`` is the anticanonical degree after the move, None on the
    terminal step (``maximal-family`` or ``indeterminate``).
    """

    move: str
    detail: str
    k_squared: int | None = None


@dataclass(frozen=True)
class Verdict:
    outcome: str  # "maximal" | "not_maximal" | "indeterminate"
    family: int | None = None
    subfamily: str | None = None
    invariant: object = None
    chain: tuple[ChainStep, ...] | None = None
    reason: str | None = None


def _maximal(family: int, invariant, subfamily: str | None = None) -> Verdict:
    return Verdict("maximal", family=family, subfamily=subfamily,
                   invariant=invariant)


def _not_maximal(*steps: ChainStep) -> Verdict:
    return Verdict("not_maximal", chain=tuple(steps))


def _family_step(n: int) -> ChainStep:
    return ChainStep("maximal-family", f"family {n}")


# canonical invariants -------------------------------------------------------


def _point_pair(p) -> list[int]:
    return [p.a, p.b]


def _delta_invariant(delta) -> dict:
    return {"delta": [_point_pair(p) for p in delta_canonical_form(delta)]}


def _triplet_invariant(triplet) -> dict:
    canon = triplet_canonical_form(triplet)
    return {"triplet": [[_point_pair(p) for p in s] for s in canon.sets]}


def _lambda_up_to_sign(raw: str) -> str:
    """Canonical form of the S_4 cubic parameter: |lambda| when rational.

    The two signs give isomorphic surfaces, so rational input is folded to
    its absolute value; a non-rational parameter string is kept verbatim
    (canonicalization over extensions is out of scope).
    """
    try:
        lam = Fraction(raw)
    except (ValueError, ZeroDivisionError):
        return raw
    if lam == 0 or 8 * lam**3 == -1:
        raise InvalidDescriptor(
            f"parameter {raw} violates the S_4 cubic restrictions "
            "(9 l^3 != 8 l and 8 l^3 != -1)")
    return str(abs(lam))


# the decision tree ----------------------------------------------------------


def _classify_hirzebruch(d: HirzebruchDescriptor) -> Verdict:
    if d.n < 0:
        raise InvalidDescriptor(f"Hirzebruch index must be >= 0, got {d.n}")
    if d.n >= 2:
        return _maximal(4, {"n": d.n})
    if d.n == 1:
        return _not_maximal(
            ChainStep("contract-orbit",
                      "contract the exceptional section; the plane remains", 9),
            _family_step(1),
        )
    # n = 0 is the quadric with both rulings
    return _maximal(2, "point")


def _classify_exceptional(d: ExceptionalDescriptor) -> Verdict:
    model = d.model
    if model.n >= 2:
        return _maximal(5, _delta_invariant(model.delta))
    return _not_maximal(
        ChainStep("extend-group",
                  "automorphisms of the ruling extend to the full automorphism "
                  "group of the del Pezzo surface of degree 6", 6),
        _family_step(3),
    )


def _classify_z22(d: Z22Descriptor) -> Verdict:
    model = d.model
    verdict = is_del_pezzo_bundle(model)
    if verdict.kind == "no":
        return _maximal(11, _triplet_invariant(model.triplet))
    if verdict.kind == "indeterminate":
        return Verdict("indeterminate", reason=verdict.reason)
    degree = model.k_squared
    step = ChainStep(
        "extend-group",
        "the fiberwise group extends inside the full automorphism group of "
        f"the del Pezzo surface of degree {degree}", degree)
    if degree == 5:
        return _not_maximal(step, _family_step(6))
    if degree == 4:
        return _not_maximal(step, _family_step(7))
    # degree 3: deciding maximality needs minimality and fixed-point data
    # that a branch triplet does not carry
    return _not_maximal(step, ChainStep(
        "indeterminate",
        "the degree-3 branch needs an action and a fixed-point report"))


def _blow_down_chain_from(degree: int) -> tuple[ChainStep, ...]:
    """The strictly descending blow-up chain ending in family 10."""
    steps = []
    current = degree
    while current > 1:
        current -= 1
        extra = " with no automorphism table row" if current == 2 else ""
        steps.append(ChainStep(
            "blow-up-fixed-point",
            f"blow up a fixed point off the exceptional curves; "
            f"del Pezzo of degree {current}{extra}", current))
    steps.append(_family_step(10))
    return tuple(steps)


def _classify_del_pezzo(d: DelPezzoDescriptor) -> Verdict:
    if not 1 <= d.degree <= 9:
        raise InvalidDescriptor(f"del Pezzo degree must be 1..9, got {d.degree}")
    if d.p1xp1 and d.degree != 8:
        raise InvalidDescriptor("the p1xp1 flag only applies to degree 8")
    if d.fixed_point_report is not None and d.fixed_point_report not in _FIXED_POINT_REPORTS:
        raise InvalidDescriptor(
            f"unknown fixed point report {d.fixed_point_report!r}; "
            f"expected one of {_FIXED_POINT_REPORTS}")
    if d.cubic_family is not None:
        if d.degree != 3:
            raise InvalidDescriptor("cubic family tags only apply to degree 3")
        if d.cubic_family not in _CUBIC_TAGS:
            raise InvalidDescriptor(f"unknown cubic family tag {d.cubic_family!r}")
    if d.quartic_row is not None and d.degree != 2:
        raise InvalidDescriptor("quartic table rows only apply to degree 2")
    if d.action is not None and d.action.lattice.r != 9 - d.degree:
        raise InvalidDescriptor(
            f"degree {d.degree} needs a lattice with r = {9 - d.degree}, "
            f"got r = {d.action.lattice.r}")

    deg = d.degree
    if deg == 9:
        return _maximal(1, "point")
    if deg == 8:
        if d.p1xp1:
            return _maximal(2, "point")
        return _not_maximal(
            ChainStep("contract-orbit",
                      "contract the exceptional section; the plane remains", 9),
            _family_step(1),
        )
    if deg == 7:
        return _not_maximal(
            ChainStep("contract-orbit",
                      "contract the invariant (-1)-curve joining the two "
                      "exceptional curves; the quadric remains", 8),
            _family_step(2),
        )
    if deg == 6:
        return _maximal(3, "point")
    if deg == 5:
        return _maximal(6, "point")
    if deg == 4:
        return _maximal(7, {"iso_class": d.iso_class_tag})
    if deg == 3:
        return _classify_cubic(d)
    if deg == 2:
        return _classify_quartic_cover(d)
    return _maximal(10, {"iso_class": d.iso_class_tag})


def _classify_cubic(d: DelPezzoDescriptor) -> Verdict:
    if d.action is None:
        raise InvalidDescriptor("degree 3 needs the lattice action to decide minimality")
    if d.fixed_point_report is None:
        raise InvalidDescriptor("degree 3 needs a fixed point report")
    minimal, _witness = is_pair_minimal(d.action.lattice, d.action)
    if minimal and d.fixed_point_report == ALL_ON_EXCEPTIONAL:
        if d.cubic_family is None:
            raise InvalidDescriptor(
                "a minimal cubic action with fixed points on the exceptional "
                "curves needs its equation family tag")
        if d.cubic_family == CUBIC_EXTRA_FIXED_POINT:
            raise InvalidDescriptor(
                "the extra-fixed-point family contradicts an all-on-exceptional report")
        sub = _CUBIC_SUBFAMILY[d.cubic_family]
        datum: dict = {"subfamily": sub}
        if sub == "8a":
            datum["alpha"] = d.parameter
        elif sub == "8c":
            if d.parameter is None:
                raise InvalidDescriptor("the S_4 cubic family needs its parameter")
            datum["lambda_up_to_sign"] = _lambda_up_to_sign(d.parameter)
        return _maximal(8, datum, subfamily=sub)
    return _not_maximal(*_blow_down_chain_from(3))


def _classify_quartic_cover(d: DelPezzoDescriptor) -> Verdict:
    if d.quartic_row is not None:
        order, label = d.quartic_row
        if label not in _DEGREE2_LABELS:
            raise InvalidDescriptor(f"unknown degree-2 structure label {label!r}")
        if DEGREE2_TABLE.get(order) != label:
            raise InvalidDescriptor(
                f"({order}, {label!r}) is not a row of the degree-2 table")
        if d.restrictions_satisfied:
            return _maximal(9, {"order": order, "structure": label})
    return _not_maximal(*_blow_down_chain_from(2))


def classify(d: GSurfaceDescriptor) -> Verdict:
    """Map a descriptor to its verdict; total and deterministic."""
    if isinstance(d, HirzebruchDescriptor):
        return _classify_hirzebruch(d)
    if isinstance(d, ExceptionalDescriptor):
        return _classify_exceptional(d)
    if isinstance(d, Z22Descriptor):
        return _classify_z22(d)
    if isinstance(d, DelPezzoDescriptor):
        return _classify_del_pezzo(d)
    raise InvalidDescriptor(f"not a surface descriptor: {d!r}")


def conjugacy_invariant(v: Verdict) -> dict:
    """The canonical datum separating conjugacy classes within a family.

    Only maximal verdicts carry one.  Equal data means conjugate over Q
    for the families with point or integer data; for families 5, 8 and 11
    the canonical forms are computed over Q, so distinct data may still be
    conjugate over an extension (documented caveat).
    """
    if v.outcome != "maximal":
        raise NotApplicable(f"no conjugacy invariant for outcome {v.outcome!r}")
    return {"family": v.family, "datum": v.invariant}


# link feasibility -----------------------------------------------------------


class LinkEntry(NamedTuple):
    link_type: int
    status: str  # "excluded" | "possibly_open"
    reason: str
    witness: tuple[int, int] | None = None


@dataclass(frozen=True)
class LinkReport:
    family: int
    k_squared: int
    entries: tuple[LinkEntry, LinkEntry, LinkEntry, LinkEntry]


#: maximal point-case families whose groups have no finite orbit at all
_NO_FINITE_ORBIT = {
    1: "the group acts with no finite orbit on the plane",
    2: "the group acts with no finite orbit on the quadric",
    3: "the torus orbits are infinite and the boundary is exceptional",
}

#: smallest orbit size on the complement of the exceptional curves,
#: by anticanonical degree of the point-case surface
_MIN_ORBIT = {1: 1, 2: 2, 3: 3, 4: 4, 5: 6}

_POINT_CASE_DEGREE = {1: 9, 2: 8, 3: 6, 6: 5, 7: 4, 8: 3, 9: 2, 10: 1}


def _point_case_entries(family: int, k2: int) -> tuple[LinkEntry, ...]:
    if family in _NO_FINITE_ORBIT:
        no_orbit = _NO_FINITE_ORBIT[family]
        one = LinkEntry(1, "excluded", no_orbit)
        two = LinkEntry(2, "excluded", no_orbit)
    else:
        if k2 in (4, 8, 9):
            one = LinkEntry(1, "possibly_open",
                            f"K^2 = {k2} passes the numerical test K^2 in {{4, 8, 9}}")
        else:
            one = LinkEntry(1, "excluded", f"K^2 = {k2} is not in {{4, 8, 9}}")
        least = _MIN_ORBIT[k2]
        two = LinkEntry(
            2, "excluded",
            f"every orbit off the exceptional curves has at least {least} "
            f"points, never fewer than K^2 = {k2}")
    three = LinkEntry(3, "excluded",
                      "a type III link starts from a conic bundle, not a point case")
    sol = second_fibration_solver(k2)
    if sol == "p1xp1":
        four = LinkEntry(4, "excluded",
                         "the two rulings of the quadric are exchanged by the group")
    elif sol is None:
        four = LinkEntry(4, "excluded",
                         f"a K^2 = 4 has no integer solution for K^2 = {k2}")
    else:
        a, b = sol
        four = LinkEntry(4, "possibly_open",
                         f"numerical second fibration class -{a} K + ({b}) f",
                         witness=sol)
    return (one, two, three, four)


def _fibration_entries(family: int, k2: int) -> tuple[LinkEntry, ...]:
    one = LinkEntry(1, "excluded",
                    "a type I link starts from a point case, not a fibration")
    two = LinkEntry(2, "excluded",
                    "the group acts without fixed point on every smooth fiber")
    if k2 in (3, 5, 6):
        three = LinkEntry(3, "possibly_open",
                          f"K^2 = {k2} passes the numerical test K^2 in {{3, 5, 6}}")
    else:
        three = LinkEntry(3, "excluded", f"K^2 = {k2} is not in {{3, 5, 6}}")
    if family == 4:
        four = LinkEntry(4, "excluded",
                         "a Hirzebruch surface carries a unique conic fibration")
    elif family == 5:
        four = LinkEntry(4, "excluded",
                         "the surface carries two sections of self-intersection "
                         "<= -2, so it is not del Pezzo and has no second fibration")
    else:
        four = LinkEntry(4, "excluded",
                         "the surface is not del Pezzo, so it has no second fibration")
    return (one, two, three, four)


def link_feasibility(d: GSurfaceDescriptor) -> LinkReport:
    """Numerical obstruction report for the four equivariant link types.

    Defined only on descriptors that classify as maximal; the verdict's
    family decides whether the Mori fibration is a point case or a conic
    bundle.
    """
    v = classify(d)
    if v.outcome != "maximal":
        raise NotAMoriFibration(
            f"descriptor classifies as {v.outcome}; link feasibility needs a "
            "maximal G-Mori fibration")
    family = v.family
    if family in _POINT_CASE_DEGREE:
        k2 = _POINT_CASE_DEGREE[family]
        return LinkReport(family, k2, _point_case_entries(family, k2))
    if family == 4:
        return LinkReport(4, 8, _fibration_entries(4, 8))
    if family == 5:
        assert isinstance(d, ExceptionalDescriptor)
        k2 = d.model.k_squared
        return LinkReport(5, k2, _fibration_entries(5, k2))
    assert family == 11 and isinstance(d, Z22Descriptor)
    k2 = d.model.k_squared
    return LinkReport(11, k2, _fibration_entries(11, k2))
