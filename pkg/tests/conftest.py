import numpy as np
import pytest
from hypothesis import settings

from qfht.hilbert import build_rule

# fixed example sequence so that every run checks the same cases
settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")

# filled by test_acceptance; echoed at the end of the run
ACCEPTANCE_LINES: dict[int, list[str]] = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


@pytest.fixture(params=[0.5, 1.0, 2.5], ids=lambda a: f"alpha={a}")
def alpha(request):
    return request.param


@pytest.fixture
def rule(alpha):
    return build_rule(alpha, 128)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        for line in ACCEPTANCE_LINES[number]:
            terminalreporter.write_line(line)
