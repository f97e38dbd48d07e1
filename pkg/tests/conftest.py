import pytest
from hypothesis import HealthCheck, settings

from sucalc.fgl import build_context

settings.register_profile(
    "default", max_examples=25, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def ctx():
    return build_context(10, 8)


@pytest.fixture(scope="session")
def small():
    """Order 6, weight cap 4: fast enough for the sympy oracles."""
    return build_context(6, 4)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
