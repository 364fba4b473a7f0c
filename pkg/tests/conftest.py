import pytest

from h2orbits import sl2

_acceptance = {}


@pytest.fixture
def debug_checks():
    """Revalidate origami invariants after every generator application."""
    previous = sl2.debug_checks_enabled()
    sl2.set_debug_checks(True)
    yield
    sl2.set_debug_checks(previous)


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
