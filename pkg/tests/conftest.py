"""Collects acceptance outcomes and prints one PASS/FAIL line per criterion."""
import pytest

CRITERIA = {}   # number -> [title, passed, detail]


def pytest_configure(config):
    CRITERIA.clear()


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or (report.when != "call" and report.passed):
        return
    number, title = mark.args
    entry = CRITERIA.setdefault(number, [title, True, ""])
    if not report.passed:
        entry[1] = False
        entry[2] = entry[2] or (report.longrepr.reprcrash.message.splitlines()[0]
                                if hasattr(report.longrepr, "reprcrash") else str(report.longrepr)[:120])


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        title, passed, detail = CRITERIA[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
