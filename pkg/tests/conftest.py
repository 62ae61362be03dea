import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

_criteria: dict[str, list[bool]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    marker = "test_acceptance.py::test_criterion_"
    if marker not in report.nodeid:
        return
    name = report.nodeid.split(marker, 1)[1]
    num = name.split("_", 1)[0]
    _criteria.setdefault(num, []).append(report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria, key=int):
        results = _criteria[num]
        status = "PASS" if all(results) else "FAIL"
        terminalreporter.write_line(
            f"criterion {num}: {status} ({sum(results)}/{len(results)} checks passed)"
        )
