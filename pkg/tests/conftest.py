import numpy as np
import pytest

from semsig import make_signal

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def zigzag():
    return make_signal([0, 1] * 50, 256)


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)
