import random
import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from hahnseries import Exponent, Series


def e(i, q=1):
    return Exponent.atom(i, q)


def tau(i, shift=1, q=1):
    return Exponent.tail(i, shift, q)


def mono(g, c=1):
    return Series.monomial(g, c)


@pytest.fixture
def t():
    """The monomial ``t^{e(0)}``."""
    return Series.monomial(e(0))


F = Fraction

# seeded generators keep hypothesis examples small and shrinkable
rngs = st.integers(0, 2**32 - 1).map(random.Random)


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines at the end so they survive output capture."""
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(module.line(n, *results[n]))
