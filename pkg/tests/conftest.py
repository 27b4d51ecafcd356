"""Prints the acceptance scoreboard after the run.

Each acceptance criterion is an ordinary test in test_acceptance.py named
test_criterion_<n>_*; this hook turns their outcomes into one PASS/FAIL
line apiece so the gate is readable at the bottom of any full run.
"""

import re

_LABELS = {
    1: "reference table rows 4..24 reproduce exactly, decimals to printed precision, < 5 s",
    2: "icosahedron certificate: exactly (1+sqrt5)/12, matches 0.26967 to 5 places",
    3: "johnson 2-subset certificates k=6..16: exactly 2(k-3)/(k(k-1)), beat 1/k and 1/(k-1/2)",
    4: "closed blowup spectra: analytic == numeric within 1e-8, 50 seeded graphs, t in {1,2,3}, < 30 s",
    5: "srg/drg moment identities exact; gosset and johnson:8,2 certificates agree at 5/28",
    6: "exhaustive oracles: (2,4) -> 1/2, (3,6) -> 1/3, (3,n<=7) <= 1/3 + 1e-9, n=7 < 10 min",
    7: "dominance: no certificate or search result exceeds 1/(2 sqrt(k-1))",
    8: "seeded anneal k=4 n=12 seed=42: bit-reproducible, ratio >= 0.25, < 5 min",
    9: "graph6 fidelity: exhaustive n<=5, 1000 random n<=10, fixed vectors",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for category in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(category, []):
            nodeid = getattr(report, "nodeid", "")
            m = re.search(r"::test_criterion_(\d+)", nodeid)
            if m:
                num = int(m.group(1))
                status = "PASS" if category == "passed" else "FAIL"
                # a setup/teardown error must not mask a failure
                if outcomes.get(num) != "FAIL":
                    outcomes[num] = status
    if not outcomes:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria")
    for num in sorted(_LABELS):
        status = outcomes.get(num, "NOT RUN")
        terminalreporter.write_line(f"  criterion {num}: {status} - {_LABELS[num]}")
