import numpy as np
import pytest

from ftrisk import datasets, smooth

_CRITERIA = {}


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(scope="session")
def czech():
    return datasets.czech2011()


@pytest.fixture(scope="session")
def czech_smoothed(czech):
    return smooth(czech)


@pytest.fixture
def criterion():
    """Record an acceptance verdict, print it in the summary, then assert it."""

    def check(name, ok, detail=""):
        _CRITERIA[name] = (bool(ok), detail)
        assert ok, f"{name}: {detail}"

    return check


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA, key=lambda s: int(s.split()[0][2:])):
        ok, detail = _CRITERIA[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
