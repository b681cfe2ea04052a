"""Prints one pass/fail line per acceptance criterion after a run that
touched tests/test_acceptance.py."""

CRITERIA = {
    "test_a01": ("A1", "Euler characteristics chi(Q) = 1, chi(P) = 0"),
    "test_a02": ("A2", "both shipped certificates reduce to Q's relators"),
    "test_a03": ("A3", "group ring law y^-1 x y = x^-1 and relators vanish"),
    "test_a04": ("A4", "boundary rows factor through d2(D) by (y - x^-1), (x^3 - x - 1)"),
    "test_a05": ("A5", "unit combination equals 1 and splits the kernel map"),
    "test_a06": ("A6", "x^3 - x - 1 does not divide x^3 + x^2 - 1; condition (ii) holds"),
    "test_a07": ("A7", "degree-1 and monic witnesses in V; 1 is not in V"),
    "test_a08": ("A8", "presentations are certified equivalent in both directions"),
    "test_a09": ("A9", "aggregate verdict true; corrupt inputs flip their flags"),
    "test_a10": ("A10", "randomized property suites, fixed seed, >= 500 cases each"),
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    rows = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if getattr(rep, "when", None) != "call":
                continue
            if "test_acceptance" not in rep.nodeid:
                continue
            name = rep.nodeid.rsplit("::", 1)[-1]
            key = name.split("_", 2)
            key = "_".join(key[:2]) if len(key) >= 2 else name
            if key in CRITERIA:
                label, desc = CRITERIA[key]
                rows.append((label, desc, outcome == "passed"))
    if not rows:
        return
    rows.sort(key=lambda r: (len(r[0]), r[0]))
    terminalreporter.write_sep("-", "acceptance criteria")
    for label, desc, ok in rows:
        terminalreporter.write_line(f"{label:<4} {'PASS' if ok else 'FAIL'}  {desc}")
