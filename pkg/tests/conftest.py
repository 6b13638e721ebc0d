"""Shared fixtures for the heapknot test suite."""

import os

import pytest

from heapknot.algebra import make_group
from heapknot.config import reset_settings


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Give every test default settings and no HEAPKNOT_ environment."""
    for key in list(os.environ):
        if key.startswith("HEAPKNOT_"):
            monkeypatch.delenv(key)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def z2():
    return make_group("Z2")


@pytest.fixture
def z3():
    return make_group("Z3")


@pytest.fixture
def z4():
    return make_group("Z4")


@pytest.fixture
def d3():
    return make_group("D3")
