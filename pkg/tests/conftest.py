"""Acceptance bookkeeping: tests marked ``criterion(n, label)`` report one
PASS/FAIL line per criterion at the end of the session."""

import pytest

_OUTCOMES = {}  # criterion -> [label, passed, detail]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, label): acceptance criterion")


@pytest.fixture
def acceptance_detail(request):
    """Callable that attaches a one-line summary to the test's criterion."""
    marker = request.node.get_closest_marker("criterion")

    def note(text):
        _OUTCOMES.setdefault(marker.args[0], [marker.args[1], True, ""])[2] = text

    return note


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and report.passed:
        return
    entry = _OUTCOMES.setdefault(marker.args[0], [marker.args[1], True, ""])
    if not report.passed:
        entry[1] = False


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        label, passed, detail = _OUTCOMES[number]
        tag = "PASS" if passed else "FAIL"
        tail = f"  {detail}" if detail else ""
        terminalreporter.write_line(f"{tag}  [{number}] {label}{tail}")
