import re

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    m = re.search(r"test_acceptance\.py::test_criterion\[criterion_(\d+)\]", item.nodeid)
    if m and (report.when == "call" or report.failed):
        number = int(m.group(1))
        if report.passed and report.when == "call":
            _ACCEPTANCE.setdefault(number, ("PASS", report.duration))
        elif report.failed:
            _ACCEPTANCE[number] = ("FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        status, duration = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status} ({duration:.2f}s)")
