import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

CRITERIA = {
    1: "exact Molien regression (B2, S3, +-I)",
    2: "exact volume ratios for Hopf, finite-group and Clifford entries",
    3: "Hironaka ratio equals Laurent leading coefficient, 200 random instances",
    4: "partial-fraction reconstruction (500 coefficients) and asymptotic profile",
    5: "b-series identity at K=500 and Hopf closed-form count",
    6: "Weyl law: error <= 0.01 at k=1000, strictly decreasing over k=100,300,1000",
    7: "heat trace within 2% of A Gamma(m/2+1) at s=1e-3, tail < 1e-8",
    8: "volume identity omega_m |S^m| = 2 (2 pi)^m / m!, m <= 20",
    9: "ratios are exact and their denominators divide prod(d) * rank",
    10: "negative controls: 1/(1-z^3) fails the CM check, corruption is detected",
}

_results = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    n = marker.args[0]
    if report.when == "call" or (report.when == "setup" and not report.passed):
        # an expected failure is still a failure of the criterion
        passed = report.passed and not hasattr(report, "wasxfail")
        _results[n].append((item.name, passed))


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        cases = _results.get(n)
        if not cases:
            continue
        failed = [name for name, ok in cases if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"criterion {n:2d}: {status}  {CRITERIA[n]} [{len(cases) - len(failed)}/{len(cases)} cases]"
        if failed:
            line += " failing: " + ", ".join(failed)
        terminalreporter.write_line(line)
