import numpy as np
import pytest

_ACCEPTANCE = []


def record(criterion, passed, detail):
    """Remember one acceptance line for the end-of-session summary.

    ``passed=None`` marks a criterion that was not run.
    """
    _ACCEPTANCE.append((criterion, None if passed is None else bool(passed), detail))


@pytest.fixture
def accept():
    return record


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, passed, detail in _ACCEPTANCE:
        tag = "SKIP" if passed is None else ("PASS" if passed else "FAIL")
        terminalreporter.write_line(f"[{tag}] {criterion}: {detail}")
