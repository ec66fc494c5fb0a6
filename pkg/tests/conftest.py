"""Shared diagrams for the test-suite."""

from __future__ import annotations

import pytest

from skeinverse.core.diagram import load_census, parse_diagram
from skeinverse.core.skein import SHARED_MEMO


@pytest.fixture(scope="session")
def census():
    return {entry.name: entry.diagram for entry in load_census()}


@pytest.fixture(scope="session")
def census_entries():
    return load_census()


@pytest.fixture
def kink_negative():
    return parse_diagram("C(1,2,2,1)")


@pytest.fixture
def kink_positive():
    return parse_diagram("C(1,1,2,2)")


@pytest.fixture
def hopf():
    return parse_diagram("C(1,3,2,4) C(3,1,4,2)")


@pytest.fixture
def trefoil():
    return parse_diagram("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")


@pytest.fixture(autouse=True)
def _fresh_memo():
    SHARED_MEMO.clear()
    yield
