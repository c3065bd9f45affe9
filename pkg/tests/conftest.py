import pytest

from homhopf.library import (
    build_builtin,
    crossed_constant,
    plain_constant,
    twisted_constant,
)
from homhopf.linalg import FieldSpec
from homhopf.yd import diagonal_yd_module, yd_on_H, yd_unit_k

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def F():
    return FieldSpec(101)


@pytest.fixture(scope="session")
def twisted_host():
    return twisted_constant()


@pytest.fixture(scope="session")
def crossed_host():
    return crossed_constant()


@pytest.fixture(scope="session")
def plain_host():
    return plain_constant()


@pytest.fixture(scope="session")
def twisted_mods(twisted_host):
    return {"k": yd_unit_k(twisted_host), "H": yd_on_H(twisted_host)}


@pytest.fixture(scope="session")
def crossed_mods(crossed_host):
    return {"k": yd_unit_k(crossed_host), "H": yd_on_H(crossed_host),
            "D0": diagonal_yd_module(crossed_host, 0), "D1": diagonal_yd_module(crossed_host, 1)}


@pytest.fixture(scope="session")
def builtin():
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = build_builtin(name)
        return cache[name]

    return get


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
