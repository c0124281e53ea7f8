"""Command-line front end: JSON in, JSON out, exit codes for batch use.

Exit status: 0 success, 1 invalid input (malformed JSON, bad descriptor,
unreadable file), 2 an indeterminate classification, 3 a violated internal
invariant.  Logs go to standard error at the level named by the
``CREMONA_LOG`` environment variable; reports go to the output path
(default standard output).
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from . import jsonio, suites
from .bundles import (
    build_from_four_lines,
    build_from_three_lines_conic,
    exceptional_from_delta,
    z22_from_triplet,
)
from .classifier import classify, link_feasibility
from .errors import CremonaError
from .picard import (
    BlowupLattice,
    adjunction_genus,
    enumerate_minus_one_classes,
    intersect,
    invariant_sublattice,
)
from .square_class import delta_canonical_form, triplet_canonical_form

log = logging.getLogger("cremona")

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_INDETERMINATE = 2
EXIT_INVARIANT_VIOLATION = 3


def _read_json(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    return json.loads(text)


def _write_report(path: str, doc) -> None:
    payload = jsonio.dumps(doc)
    if path == "-":
        sys.stdout.write(payload)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(payload)


def _cmd_classify(args) -> int:
    descriptor = jsonio.parse_descriptor(_read_json(args.input))
    verdict = classify(descriptor)
    doc = jsonio.verdict_json(verdict)
    if args.links and verdict.outcome == "maximal":
        doc["links"] = jsonio.link_report_json(link_feasibility(descriptor))
    _write_report(args.output, doc)
    if verdict.outcome == "indeterminate":
        log.info("indeterminate verdict: %s", verdict.reason)
        return EXIT_INDETERMINATE
    return EXIT_OK


def _cmd_construct(args) -> int:
    doc = _read_json(args.input)
    obj = doc if isinstance(doc, dict) else {}
    if args.kind == "four-lines":
        lines = jsonio.expect_list(obj.get("lines"), "$.lines", 4)
        model = build_from_four_lines(
            tuple(jsonio.parse_line(l, f"$.lines[{i}]") for i, l in enumerate(lines)),
            jsonio.parse_p2_point(obj.get("center"), "$.center"))
        report = jsonio.z22_model_json(model)
    elif args.kind == "three-lines-conic":
        lines = jsonio.expect_list(obj.get("lines"), "$.lines", 3)
        model = build_from_three_lines_conic(
            tuple(jsonio.parse_line(l, f"$.lines[{i}]") for i, l in enumerate(lines)),
            jsonio.parse_conic(obj.get("conic"), "$.conic"),
            jsonio.parse_p2_point(obj.get("d1"), "$.d1"),
            jsonio.parse_p2_point(obj.get("d2"), "$.d2"))
        report = jsonio.z22_model_json(model)
    elif args.kind == "z22":
        triplet = jsonio.parse_triplet(obj.get("triplet"), "$.triplet")
        cert = None
        if obj.get("certificate") is not None:
            cert = jsonio.parse_certificate(obj["certificate"], "$.certificate")
        report = jsonio.z22_model_json(z22_from_triplet(triplet, cert))
    else:
        delta = jsonio.parse_p1_points(obj.get("delta"), "$.delta")
        report = jsonio.exceptional_model_json(exceptional_from_delta(delta))
    _write_report(args.output, report)
    return EXIT_OK


def _cmd_lattice(args) -> int:
    if args.lattice_cmd == "minus-one-count":
        classes = enumerate_minus_one_classes(BlowupLattice(args.r))
        report = {"r": args.r, "count": len(classes)}
        if args.list:
            report["classes"] = [jsonio.divisor_json(d) for d in classes]
    elif args.lattice_cmd == "invariant-rank":
        action = jsonio.parse_action(_read_json(args.input), "$")
        rank, basis = invariant_sublattice(action)
        report = {"r": action.lattice.r, "rank": rank,
                  "basis": [jsonio.divisor_json(d) for d in basis]}
    else:
        doc = _read_json(args.input)
        obj = jsonio.expect_obj(doc, "$")
        lattice = BlowupLattice(jsonio.expect_int(obj.get("r"), "$.r"))
        divisor = jsonio.parse_divisor(obj.get("divisor"), "$.divisor")
        report = {
            "genus": adjunction_genus(lattice, divisor),
            "self_intersection": intersect(lattice, divisor, divisor),
        }
    _write_report(args.output, report)
    return EXIT_OK


def _cmd_canonical(args) -> int:
    doc = _read_json(args.input)
    obj = jsonio.expect_obj(doc, "$")
    if args.shape == "triplet":
        triplet = jsonio.parse_triplet(obj.get("triplet"), "$.triplet")
        report = {"triplet": jsonio.triplet_json(triplet_canonical_form(triplet))}
    else:
        delta = jsonio.parse_p1_points(obj.get("delta"), "$.delta")
        report = {"delta": [jsonio.point_pair(p) for p in delta_canonical_form(delta)]}
    _write_report(args.output, report)
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.suite not in suites.suite_names():
        log.error("unknown suite %r; choose from %s", args.suite, ", ".join(suites.suite_names()))
        return EXIT_INVALID_INPUT
    results = suites.run_suite(args.suite)
    checks = [
        {"name": name, "status": "ok" if error is None else "failed", "error": error}
        for name, error in results
    ]
    failed = [c for c in checks if c["status"] == "failed"]
    _write_report(args.output, {"suite": args.suite, "checks": checks,
                                "failures": len(failed)})
    for c in failed:
        log.error("check %s failed: %s", c["name"], c["error"])
    return EXIT_INVARIANT_VIOLATION if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cremona",
        description="Classify algebraic subgroup models of the plane Cremona group.")
    sub = parser.add_subparsers(dest="command", required=True)

    def io_flags(p):
        p.add_argument("--input", "-i", default="-", help="input JSON path, - for stdin")
        p.add_argument("--output", "-o", default="-", help="report path, - for stdout")

    p = sub.add_parser("classify", help="classify a surface descriptor")
    io_flags(p)
    p.add_argument("--links", action="store_true",
                   help="include the link feasibility report for maximal verdicts")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("construct", help="build a bundle model from geometric data")
    p.add_argument("kind", choices=("four-lines", "three-lines-conic", "z22", "exceptional"))
    io_flags(p)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("lattice", help="lattice computations")
    lsub = p.add_subparsers(dest="lattice_cmd", required=True)
    q = lsub.add_parser("minus-one-count", help="count (-1)-classes of a blowup lattice")
    q.add_argument("--r", type=int, required=True, help="number of blown-up points")
    q.add_argument("--list", action="store_true", help="include the classes themselves")
    q.add_argument("--output", "-o", default="-")
    q.set_defaults(func=_cmd_lattice)
    q = lsub.add_parser("invariant-rank", help="rank and basis of the fixed sublattice")
    io_flags(q)
    q.set_defaults(func=_cmd_lattice)
    q = lsub.add_parser("genus", help="adjunction genus of a divisor class")
    io_flags(q)
    q.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("canonical", help="canonical forms modulo Moebius maps")
    p.add_argument("shape", choices=("triplet", "delta"))
    io_flags(p)
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", default="all", help="suite name (default: all)")
    p.add_argument("--output", "-o", default="-")
    p.set_defaults(func=_cmd_verify)

    return parser


def _configure_logging() -> None:
    level_name = os.environ.get("CREMONA_LOG", "warning").upper()
    level = getattr(logging, level_name, None)
    if not isinstance(level, int):
        level = logging.WARNING
    logging.basicConfig(stream=sys.stderr, level=level,
                        format="%(levelname)s %(name)s: %(message)s")


def main(argv=None) -> int:
    _configure_logging()
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except json.JSONDecodeError as exc:
        log.error("malformed JSON at line %d column %d: %s", exc.lineno, exc.colno, exc.msg)
        return EXIT_INVALID_INPUT
    except OSError as exc:
        log.error("cannot read or write: %s", exc)
        return EXIT_INVALID_INPUT
    except CremonaError as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return EXIT_INVALID_INPUT
    except AssertionError as exc:
        log.error("internal invariant violation: %s", exc)
        return EXIT_INVARIANT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
