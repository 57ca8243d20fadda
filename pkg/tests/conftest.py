import functools

import pytest

from contiguard.bounds import comb_polygon, comb_polygon_odd
from contiguard.fixtures import l_shape, random_polygons, square, u_shape


@functools.lru_cache(maxsize=None)
def _comb(k, odd=False):
    return comb_polygon_odd(k) if odd else comb_polygon(k)


@pytest.fixture(scope="session")
def comb():
    """Cached comb polygon builder: ``comb(k, odd=False)``."""
    return _comb


@pytest.fixture
def sq():
    return square()


@pytest.fixture
def l6():
    return l_shape()


@pytest.fixture
def u8():
    return u_shape()


@pytest.fixture(scope="session")
def comb2():
    return _comb(2)


@pytest.fixture(scope="session")
def randoms():
    return random_polygons(12, seed=3)


ACCEPTANCE: dict = {}


@pytest.fixture(scope="session")
def record():
    """Store a one-line verdict for an acceptance criterion."""
    def _record(number, ok, detail=""):
        ACCEPTANCE[number] = (ok, detail)
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} {detail}")
