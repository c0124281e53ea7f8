"""Exact models for the maximal algebraic subgroups of the plane Cremona group.

The package builds rational surfaces with group actions as integer lattice
data (blowup Picard lattices, isometry groups, conic bundle markings),
decides minimality and del Pezzo questions by exact arithmetic, and
classifies each descriptor into one of the eleven maximal families, with
reduction chains for the non-maximal cases and numerical obstruction
reports for equivariant Sarkisov links.
"""

from .bundles import (
    ExceptionalBundleModel,
    HalphenReport,
    HirzebruchModel,
    RealizationCertificate,
    Z22BundleModel,
    build_from_four_lines,
    build_from_three_lines_conic,
    del_pezzo_verdict_for_profile,
    exceptional_from_delta,
    fixed_curve_class,
    halphen_check,
    involution_matrix,
    is_del_pezzo_bundle,
    jonquieres_involution_matrix,
    minimality_obstruction_solver,
    second_fibration_solver,
    z22_from_triplet,
)
from .classifier import (
    ALL_ON_EXCEPTIONAL,
    CUBIC_CLEBSCH,
    CUBIC_EXTRA_FIXED_POINT,
    CUBIC_S4_LAMBDA,
    CUBIC_TRIPLE_COVER,
    DEGREE2_TABLE,
    OFF_EXCEPTIONAL,
    DelPezzoDescriptor,
    ExceptionalDescriptor,
    HirzebruchDescriptor,
    LinkEntry,
    LinkReport,
    Verdict,
    Z22Descriptor,
    classify,
    conjugacy_invariant,
    link_feasibility,
)
from .errors import CremonaError
from .geometry import (
    Conic,
    Line,
    Mobius,
    P1Point,
    P2Point,
    are_collinear,
    intersect_line_conic,
    is_general_position,
    line_through,
    lines_meet,
    mobius_from_triples,
    project_from,
)
from .picard import (
    BlowupLattice,
    DivisorClass,
    FiberedMarking,
    LatticeAction,
    adjunction_genus,
    enumerate_minus_one_classes,
    intersect,
    invariant_sublattice,
    is_pair_minimal,
    orbits,
    reflection_matrix,
    verify_mori_fibration,
)
from .square_class import (
    RamificationTriplet,
    SquareClass,
    delta_canonical_form,
    realizable_profiles,
    square_class_of,
    stabilizer,
    triplet_canonical_form,
    triplet_from_profile,
    validate_triplet,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_ON_EXCEPTIONAL",
    "BlowupLattice",
    "CUBIC_CLEBSCH",
    "CUBIC_EXTRA_FIXED_POINT",
    "CUBIC_S4_LAMBDA",
    "CUBIC_TRIPLE_COVER",
    "Conic",
    "CremonaError",
    "DEGREE2_TABLE",
    "DelPezzoDescriptor",
    "DivisorClass",
    "ExceptionalBundleModel",
    "ExceptionalDescriptor",
    "FiberedMarking",
    "HalphenReport",
    "HirzebruchDescriptor",
    "HirzebruchModel",
    "LatticeAction",
    "Line",
    "LinkEntry",
    "LinkReport",
    "Mobius",
    "OFF_EXCEPTIONAL",
    "P1Point",
    "P2Point",
    "RamificationTriplet",
    "RealizationCertificate",
    "SquareClass",
    "Verdict",
    "Z22BundleModel",
    "Z22Descriptor",
    "adjunction_genus",
    "are_collinear",
    "build_from_four_lines",
    "build_from_three_lines_conic",
    "classify",
    "conjugacy_invariant",
    "del_pezzo_verdict_for_profile",
    "delta_canonical_form",
    "enumerate_minus_one_classes",
    "exceptional_from_delta",
    "fixed_curve_class",
    "halphen_check",
    "intersect",
    "intersect_line_conic",
    "invariant_sublattice",
    "involution_matrix",
    "is_del_pezzo_bundle",
    "is_general_position",
    "is_pair_minimal",
    "jonquieres_involution_matrix",
    "line_through",
    "lines_meet",
    "link_feasibility",
    "minimality_obstruction_solver",
    "mobius_from_triples",
    "orbits",
    "project_from",
    "realizable_profiles",
    "reflection_matrix",
    "second_fibration_solver",
    "square_class_of",
    "stabilizer",
    "triplet_canonical_form",
    "triplet_from_profile",
    "validate_triplet",
    "verify_mori_fibration",
    "z22_from_triplet",
]
