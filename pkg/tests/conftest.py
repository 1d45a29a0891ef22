from pathlib import Path

import pytest

from drnkit import load_network, new_drn

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def example_a():
    return new_drn("AB", [[2, 0], [-1, -1], [-1, 3]], [[0, 0], [1, 1], [5, 0]])


@pytest.fixture
def example_b():
    return load_network(FIXTURES / "example-b.drn")


@pytest.fixture(scope="session")
def circadian():
    return load_network(FIXTURES / "circadian.drn")


@pytest.fixture(scope="session")
def phospho():
    return load_network(FIXTURES / "phospho-k2.drn")


_acceptance = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        name = report.nodeid.split("::")[-1]
        _acceptance.append((name, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}  ({duration:.2f}s)")
