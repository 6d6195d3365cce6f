import pytest
from hypothesis import HealthCheck, settings

from qfh import cache
from qfh.errors import guards

settings.register_profile("repro", derandomize=True, max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repro")


@pytest.fixture(autouse=True)
def _isolated_state():
    """Keep the disk cache off and guards at their defaults between tests."""
    saved = (cache.disk(), guards.max_n, guards.k_max, guards.max_enum)
    cache.configure(None)
    yield
    cache.configure(saved[0])
    guards.max_n, guards.k_max, guards.max_enum = saved[1:]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
