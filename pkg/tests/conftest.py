import pytest
from hypothesis import settings

from antipodal.core import AntipodalSet, regular_set

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

_acceptance: dict[str, str] = {}


@pytest.fixture
def reg3() -> AntipodalSet:
    return regular_set(3)


@pytest.fixture
def reg4() -> AntipodalSet:
    return regular_set(4)


@pytest.fixture
def reg5() -> AntipodalSet:
    return regular_set(5)


@pytest.fixture
def reg6() -> AntipodalSet:
    return regular_set(6)


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items()):
        label = name.removeprefix("test_").replace("_", " ", 1).replace("_", " ")
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
