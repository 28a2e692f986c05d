import numpy as np
import pytest

from oracles import corpus

ACCEPTANCE_RESULTS = {}


@pytest.fixture(scope="session")
def random_corpus():
    matrices, rejected = corpus()
    return matrices


@pytest.fixture
def fixture_X():
    return np.array([[2.0, 0.0], [0.0, 1.0]])


@pytest.fixture
def record_criterion():
    """Register a pass/fail line for the acceptance summary."""

    def record(number, title, passed, detail=""):
        ACCEPTANCE_RESULTS[number] = (title, bool(passed), detail)
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        title, passed, detail = ACCEPTANCE_RESULTS[number]
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] {number:2d}. {title}" + (f" ({detail})" if detail else ""))
