import numpy as np
import pytest

from magic_jsd import PureState

R2 = 1 / np.sqrt(2)

# (criterion, passed, detail) lines collected by test_acceptance.py
ACCEPTANCE_LINES = []


@pytest.fixture
def rng():
    return np.random.Generator(np.random.Philox(12345))


@pytest.fixture
def ket():
    return {
        "0": PureState([1, 0]),
        "1": PureState([0, 1]),
        "+": PureState([R2, R2]),
        "-": PureState([R2, -R2]),
        "+i": PureState([R2, 1j * R2]),
    }


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num, ok, detail in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
