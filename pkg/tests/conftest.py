import functools

import pytest

from pgeom.arcs import desarguesian_plane, regular_hyperoval
from pgeom.catalog import builtin

# criterion number -> (passed, detail), filled by test_acceptance
ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running extended checks")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {detail}")


@functools.lru_cache(maxsize=None)
def _builtin(name):
    return builtin(name)


@functools.lru_cache(maxsize=None)
def _plane(q):
    return desarguesian_plane(q)


@pytest.fixture(scope="session")
def G1():
    return _builtin("G1")


@pytest.fixture(scope="session")
def G2():
    return _builtin("G2")


@pytest.fixture(scope="session")
def W2():
    return _builtin("W2")


@pytest.fixture(scope="session")
def plane():
    return _plane


@pytest.fixture(scope="session")
def hyperoval():
    return lambda q: regular_hyperoval(_plane(q))
