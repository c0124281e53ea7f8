"""JSON schemas for descriptors, models, verdicts and reports.

Parsing is strict: integers must be JSON integers (no floats), points may
be given unreduced, and every error names the offending location with a
``$.path[i]`` pointer.  Emission is byte-stable: keys are sorted, numbers
are plain integers, exact rationals are ``"p/q"`` strings, and every
document ends with a newline.
"""

from __future__ import annotations

import json
from fractions import Fraction

from . import intlinalg as la
from .bundles import (
    ExceptionalBundleModel,
    RealizationCertificate,
    Z22BundleModel,
    exceptional_from_delta,
    z22_from_triplet,
)
from .classifier import (
    DelPezzoDescriptor,
    ExceptionalDescriptor,
    GSurfaceDescriptor,
    HirzebruchDescriptor,
    LinkReport,
    Verdict,
    Z22Descriptor,
)
from .errors import InvalidDescriptor
from .geometry import Conic, Line, Mobius, P1Point, P2Point
from .picard import BlowupLattice, DivisorClass, LatticeAction
from .square_class import RamificationTriplet, validate_triplet


def dumps(obj) -> str:
    """Serialize a JSON-native object byte-stably."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# low-level expectation helpers ----------------------------------------------


def _fail(where: str, message: str) -> InvalidDescriptor:
    return InvalidDescriptor(f"at {where}: {message}")


def expect_int(v, where: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        raise _fail(where, f"expected an integer, got {v!r}")
    return v


def expect_str(v, where: str) -> str:
    if not isinstance(v, str):
        raise _fail(where, f"expected a string, got {v!r}")
    return v


def expect_list(v, where: str, length: int | None = None) -> list:
    if not isinstance(v, list):
        raise _fail(where, f"expected an array, got {v!r}")
    if length is not None and len(v) != length:
        raise _fail(where, f"expected {length} entries, got {len(v)}")
    return v


def expect_obj(v, where: str) -> dict:
    if not isinstance(v, dict):
        raise _fail(where, f"expected an object, got {v!r}")
    return v


# points, lines, conics, maps -------------------------------------------------


def parse_p1_point(v, where: str) -> P1Point:
    """A point of the line: ``[a, b]``, an integer, ``"p/q"`` or ``"inf"``."""
    if isinstance(v, bool):
        raise _fail(where, "expected a point, got a boolean")
    if isinstance(v, int):
        return P1Point(v, 1)
    if isinstance(v, str):
        if v in ("inf", "oo", "infinity"):
            return P1Point.infinity()
        try:
            return P1Point.from_value(Fraction(v))
        except (ValueError, ZeroDivisionError) as exc:
            raise _fail(where, f"cannot read {v!r} as an exact rational") from exc
    pair = expect_list(v, where, 2)
    a = expect_int(pair[0], f"{where}[0]")
    b = expect_int(pair[1], f"{where}[1]")
    if a == 0 and b == 0:
        raise _fail(where, "[0, 0] is not a point of the line")
    return P1Point(a, b)


def parse_p1_points(v, where: str) -> tuple[P1Point, ...]:
    items = expect_list(v, where)
    return tuple(parse_p1_point(x, f"{where}[{i}]") for i, x in enumerate(items))


def parse_p2_point(v, where: str) -> P2Point:
    triple = expect_list(v, where, 3)
    a, b, c = (expect_int(x, f"{where}[{i}]") for i, x in enumerate(triple))
    if a == 0 and b == 0 and c == 0:
        raise _fail(where, "[0, 0, 0] is not a point of the plane")
    return P2Point(a, b, c)


def parse_line(v, where: str) -> Line:
    triple = expect_list(v, where, 3)
    u, vv, w = (expect_int(x, f"{where}[{i}]") for i, x in enumerate(triple))
    if u == 0 and vv == 0 and w == 0:
        raise _fail(where, "the zero form is not a line")
    return Line(u, vv, w)


_CONIC_KEYS = ("xx", "yy", "zz", "xy", "xz", "yz")


def parse_conic(v, where: str) -> Conic:
    obj = expect_obj(v, where)
    unknown = sorted(set(obj) - set(_CONIC_KEYS))
    if unknown:
        raise _fail(where, f"unknown conic keys {unknown}")
    coeffs = tuple(expect_int(obj.get(k, 0), f"{where}.{k}") for k in _CONIC_KEYS)
    return Conic(*coeffs)


def parse_mobius(v, where: str) -> Mobius:
    rows = expect_list(v, where, 2)
    a, b = (expect_int(x, f"{where}[0][{i}]") for i, x in enumerate(expect_list(rows[0], f"{where}[0]", 2)))
    c, d = (expect_int(x, f"{where}[1][{i}]") for i, x in enumerate(expect_list(rows[1], f"{where}[1]", 2)))
    return Mobius.from_coeffs(a, b, c, d)


def point_pair(p: P1Point) -> list[int]:
    return [p.a, p.b]


# lattices ---------------------------------------------------------------------


def parse_divisor(v, where: str) -> DivisorClass:
    items = expect_list(v, where)
    return DivisorClass(tuple(expect_int(x, f"{where}[{i}]") for i, x in enumerate(items)))


def parse_matrix(v, where: str):
    rows = expect_list(v, where)
    out = []
    for i, row in enumerate(rows):
        cells = expect_list(row, f"{where}[{i}]")
        out.append(tuple(expect_int(x, f"{where}[{i}][{j}]") for j, x in enumerate(cells)))
    return la.freeze(out)


def parse_action(v, where: str) -> LatticeAction:
    obj = expect_obj(v, where)
    r = expect_int(obj.get("r"), f"{where}.r")
    gens = expect_list(obj.get("generators", []), f"{where}.generators")
    matrices = tuple(parse_matrix(g, f"{where}.generators[{i}]") for i, g in enumerate(gens))
    return LatticeAction(BlowupLattice(r), matrices)


def matrix_json(m) -> list[list[int]]:
    return [list(row) for row in m]


def divisor_json(d: DivisorClass) -> list[int]:
    return list(d.coeffs)


# triplets and bundle models ---------------------------------------------------


def parse_triplet(v, where: str) -> RamificationTriplet:
    sets = expect_list(v, where, 3)
    parsed = [parse_p1_points(s, f"{where}[{i}]") for i, s in enumerate(sets)]
    return validate_triplet(*parsed)


def triplet_json(t: RamificationTriplet) -> list[list[list[int]]]:
    return [[point_pair(p) for p in s] for s in t.sets]


def parse_certificate(v, where: str) -> RealizationCertificate:
    obj = expect_obj(v, where)
    source = expect_str(obj.get("source"), f"{where}.source")
    secs = expect_list(obj.get("sections"), f"{where}.sections", 4)
    sections = tuple(parse_divisor(s, f"{where}.sections[{i}]") for i, s in enumerate(secs))
    matrix = parse_matrix(obj.get("matrix"), f"{where}.matrix")
    return RealizationCertificate(source, sections, matrix)


def certificate_json(cert: RealizationCertificate) -> dict:
    return {
        "source": cert.source,
        "sections": [divisor_json(s) for s in cert.section_classes],
        "matrix": matrix_json(cert.intersection_matrix),
    }


def z22_model_json(model: Z22BundleModel) -> dict:
    doc = {
        "kind": "z22",
        "triplet": triplet_json(model.triplet),
        "profile": list(model.profile),
        "k": model.k,
        "k_squared": model.k_squared,
        "generators": [matrix_json(g) for g in model.generators],
    }
    if model.certificate is not None:
        doc["certificate"] = certificate_json(model.certificate)
    return doc


def exceptional_model_json(model: ExceptionalBundleModel) -> dict:
    return {
        "kind": "exceptional",
        "delta": [point_pair(p) for p in model.delta],
        "n": model.n,
        "k_squared": model.k_squared,
        "sections": [divisor_json(s) for s in model.section_classes],
        "swap": matrix_json(model.swap),
        "aut": {
            "kernel": model.aut.kernel_tag,
            "stabilizer_order": (None if model.aut.quotient_stabilizer is None
                                 else len(model.aut.quotient_stabilizer)),
            "equals_full_automorphisms": model.aut.equals_full_automorphisms,
        },
    }


# descriptors ------------------------------------------------------------------


def parse_descriptor(doc) -> GSurfaceDescriptor:
    """Read a classify input; extra informational keys are ignored."""
    obj = expect_obj(doc, "$")
    kind = expect_str(obj.get("kind"), "$.kind")
    if kind == "del-pezzo":
        return _parse_del_pezzo(obj)
    if kind == "hirzebruch":
        return HirzebruchDescriptor(n=expect_int(obj.get("n"), "$.n"))
    if kind == "exceptional":
        delta = parse_p1_points(obj.get("delta"), "$.delta")
        return ExceptionalDescriptor(exceptional_from_delta(delta))
    if kind == "z22":
        triplet = parse_triplet(obj.get("triplet"), "$.triplet")
        cert = None
        if obj.get("certificate") is not None:
            cert = parse_certificate(obj["certificate"], "$.certificate")
        return Z22Descriptor(z22_from_triplet(triplet, cert))
    raise _fail("$.kind", f"unknown descriptor kind {kind!r}")


def _parse_del_pezzo(obj: dict) -> DelPezzoDescriptor:
    degree = expect_int(obj.get("degree"), "$.degree")
    p1xp1 = obj.get("p1xp1", False)
    if not isinstance(p1xp1, bool):
        raise _fail("$.p1xp1", f"expected a boolean, got {p1xp1!r}")
    action = None
    if obj.get("action") is not None:
        action = parse_action(obj["action"], "$.action")
    report = obj.get("fixed_point_report")
    if report is not None:
        report = expect_str(report, "$.fixed_point_report")
    cubic = obj.get("cubic_family")
    if cubic is not None:
        cubic = expect_str(cubic, "$.cubic_family")
    row = obj.get("quartic_row")
    if row is not None:
        pair = expect_list(row, "$.quartic_row", 2)
        row = (expect_int(pair[0], "$.quartic_row[0]"),
               expect_str(pair[1], "$.quartic_row[1]"))
    restrictions = obj.get("restrictions_satisfied", True)
    if not isinstance(restrictions, bool):
        raise _fail("$.restrictions_satisfied", f"expected a boolean, got {restrictions!r}")
    iso = obj.get("iso_class_tag")
    if iso is not None:
        iso = expect_str(iso, "$.iso_class_tag")
    parameter = obj.get("parameter")
    if parameter is not None:
        parameter = expect_str(parameter, "$.parameter")
    return DelPezzoDescriptor(
        degree=degree, p1xp1=p1xp1, action=action, fixed_point_report=report,
        cubic_family=cubic, quartic_row=row, restrictions_satisfied=restrictions,
        iso_class_tag=iso, parameter=parameter)


# verdicts and reports ---------------------------------------------------------


def verdict_json(v: Verdict) -> dict:
    if v.outcome == "maximal":
        doc = {"outcome": "maximal", "family": v.family, "invariant": v.invariant}
        if v.subfamily is not None:
            doc["subfamily"] = v.subfamily
        return doc
    if v.outcome == "not_maximal":
        return {
            "outcome": "not_maximal",
            "chain": [
                {"move": s.move, "detail": s.detail, "k_squared": s.k_squared}
                for s in v.chain
            ],
        }
    return {"outcome": "indeterminate", "reason": v.reason}


def link_report_json(rep: LinkReport) -> dict:
    return {
        "family": rep.family,
        "k_squared": rep.k_squared,
        "links": [
            {
                "link_type": e.link_type,
                "status": e.status,
                "reason": e.reason,
                "witness": None if e.witness is None else list(e.witness),
            }
            for e in rep.entries
        ],
    }
