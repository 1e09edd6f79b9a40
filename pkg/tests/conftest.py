"""Shared fixtures, hypothesis profile and the acceptance summary lines."""

import pytest
from hypothesis import HealthCheck, settings

from hopfcyclic.instances import build_instance

settings.register_profile(
    "exact", deadline=None, derandomize=True, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow,
                           HealthCheck.function_scoped_fixture])
settings.load_profile("exact")

# criterion number -> (passed, note); filled by test_acceptance
ACCEPTANCE = {}

_CACHE = {}


def instance(name):
    """Instances are immutable after construction, so share them."""
    if name not in _CACHE:
        _CACHE[name] = build_instance(name, check_pairs=False)
    return _CACHE[name]


@pytest.fixture
def inst():
    return instance


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, note = ACCEPTANCE[n]
        terminalreporter.write_line("criterion %2d: %s  %s"
                                    % (n, "PASS" if ok else "FAIL", note))
