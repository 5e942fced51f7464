import numpy as np
import pytest

from fermigate.model import ChainSpec, SpinCouplings

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture
def record():
    """Record one acceptance line, then return the pass flag for asserting."""

    def _record(number: int, title: str, passed: bool, detail: str) -> bool:
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title} ({detail})")
        return passed

    return _record


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def unit():
    return SpinCouplings(J=1.0, V=0.0)


@pytest.fixture
def chain100():
    return ChainSpec(100)
