import sys

import pytest

from tangent_samelson import (
    build_tangent_samelson,
    root_space_decomposition,
    tangent_algebra,
)
from tangent_samelson.io import parse_algebra


@pytest.fixture(scope="session")
def so3_file():
    return parse_algebra("so3")


@pytest.fixture(scope="session")
def u3_file():
    return parse_algebra("u3")


@pytest.fixture(scope="session")
def so3(so3_file):
    return so3_file.algebra


@pytest.fixture(scope="session")
def u3(u3_file):
    return u3_file.algebra


@pytest.fixture(scope="session")
def so3_datum(so3):
    return root_space_decomposition(so3, [so3.e(1)], regular=[1])


@pytest.fixture(scope="session")
def u3_datum(u3):
    return root_space_decomposition(u3, [u3.e(1), u3.e(2), u3.e(3)], regular=[2, 1, 3])


@pytest.fixture(scope="session")
def so3_tangent(so3, so3_datum):
    tg = tangent_algebra(so3)
    return tg, build_tangent_samelson(tg, so3_datum)


@pytest.fixture(scope="session")
def u3_tangent(u3, u3_datum):
    tg = tangent_algebra(u3)
    return tg, build_tangent_samelson(tg, u3_datum)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s[3:s.index("]")])):
        terminalreporter.write_line(line)
