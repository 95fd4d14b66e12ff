import sys

import pytest
from hypothesis import HealthCheck, settings

from quiverext.constructions import fixture

settings.register_profile(
    "repo",
    deadline=None,
    max_examples=40,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")


@pytest.fixture(scope="session")
def aus2():
    return fixture("aus2").algebra


@pytest.fixture(scope="session")
def pi3():
    return fixture("pi3").algebra


@pytest.fixture(scope="session")
def hnak():
    return fixture("hnak").algebra


@pytest.fixture(scope="session")
def boundary():
    return fixture("boundary").algebra


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    results = getattr(acceptance, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
