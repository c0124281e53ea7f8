import re

ACCEPTANCE_LABELS = {
    1: "(-1)-class counts for r = 1..8",
    2: "line-pencil involution 6x6 matrix",
    3: "involution formula, all profiles k <= 10",
    4: "invariant lattice Z K + Z f and fixed curves",
    5: "del Pezzo thresholds, all profiles k <= 12",
    6: "certified quadrilateral / conic constructions",
    7: "minimality obstruction solver",
    8: "second fibration solver",
    9: "exceptional bundle eigenvalues and reduction",
    10: "Halphen boundary profile",
    11: "classifier golden corpus",
    12: "Moebius stabilizers and canonical invariance",
}

_CRITERION = re.compile(r"test_acceptance\.py::test_criterion_(\d+)")


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion, in order."""
    outcomes: dict[int, str] = {}
    for category in ("passed", "failed", "error", "skipped"):
        for report in terminalreporter.stats.get(category, []):
            nodeid = getattr(report, "nodeid", "")
            match = _CRITERION.search(nodeid)
            if not match:
                continue
            number = int(match.group(1))
            status = "PASS" if category == "passed" else "FAIL"
            if outcomes.get(number) != "FAIL":
                outcomes[number] = status
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LABELS):
        status = outcomes.get(number, "FAIL (not run)")
        label = ACCEPTANCE_LABELS[number]
        terminalreporter.write_line(f"criterion {number:02d} {status}  {label}")
