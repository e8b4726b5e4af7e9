"""Shared fixtures: the named instances from the packaged fixture data."""

from __future__ import annotations

import pytest

from tokenslide import fixtures


@pytest.fixture(scope="session")
def p3():
    return fixtures.instance("P3")


@pytest.fixture(scope="session")
def p4():
    return fixtures.instance("P4")


@pytest.fixture(scope="session")
def p5():
    return fixtures.instance("P5")


@pytest.fixture(scope="session")
def c6():
    return fixtures.instance("C6")


@pytest.fixture(scope="session")
def claw():
    return fixtures.instance("CLAW")


@pytest.fixture(scope="session")
def fig1():
    return fixtures.instance("FIG1")
