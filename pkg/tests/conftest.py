"""
Fixtures for fields and orders shared across test modules.
"""

import os

import pytest

import liftcalc as lc
from tests._util import handle_warnings

slow_enabled = os.getenv("LIFTCALC_TEST_SLOW", None)


def skip_unless_slow(msg: str = "Slow test, set LIFTCALC_TEST_SLOW to run!"):
    """
    Skip test execution based on environment.
    """
    if slow_enabled is None:
        pytest.skip(msg)


@pytest.fixture(scope="session")
def field():
    """
    Provides the residue field F_3 with the default precision.
    """
    return lc.FieldParams(3)


@pytest.fixture(scope="session")
def field5():
    """
    Provides the residue field F_5 with the default precision.
    """
    return lc.FieldParams(5)


@pytest.fixture(scope="session")
def make_order(field):
    """
    Provides a factory of orders over F_3.
    """

    def make(ext: str, level: int) -> lc.OrderSpec:
        return lc.OrderSpec(field, ext, level)

    return make


@pytest.fixture(scope="session")
def quat(field):
    """
    Provides a parser of quaternion literals over F_3.
    """

    def parse(text: str) -> lc.QuatElem:
        return lc.from_quat_literal(text, field)

    return parse


@pytest.fixture(scope="class")
def suppress_warnings():
    with handle_warnings():
        yield
