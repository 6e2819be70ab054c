import random

import pytest
from hypothesis import strategies as st

from wheelcoh.fixtures import hex_fan, hex_wheel, seven_var_flist
from wheelcoh.monomial import Monomial


def E(*indices, d=7):
    """Divisor shorthand with one-based rays: ``E(1, 6)`` is ``E_16``."""
    exps = [0] * d
    for i in indices:
        exps[i - 1] += 1
    return Monomial(exps)


@pytest.fixture(scope="session")
def fan():
    return hex_fan()


@pytest.fixture(scope="session")
def wheel():
    return hex_wheel()


@pytest.fixture(scope="session")
def hex_f():
    return seven_var_flist()


@pytest.fixture
def rng():
    return random.Random(20240611)


def monomials(d, max_exp=2):
    return st.lists(st.integers(0, max_exp), min_size=d, max_size=d).map(Monomial)


@st.composite
def flists(draw, m_values=(3, 4, 5), max_d=4, max_exp=2):
    m = draw(st.sampled_from(m_values))
    d = draw(st.integers(1, max_d))
    return [draw(monomials(d, max_exp)) for _ in range(m)]


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
