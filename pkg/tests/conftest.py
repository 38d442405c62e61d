from fractions import Fraction

import pytest
from hypothesis import strategies as st

from idemmeasure.scalars import NEG_INF, POS_INF
from idemmeasure.spaces import FiniteSpace

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
ext_scalars = st.one_of(rationals, st.just(POS_INF), st.just(NEG_INF))

# acceptance criteria push "name: PASS/FAIL ..." lines here
ACCEPTANCE_LINES: list = []


@pytest.fixture
def X3():
    return FiniteSpace(("a", "b", "c"))


@pytest.fixture
def X2():
    return FiniteSpace(("a", "b"))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


__all__ = ["Fraction", "rationals", "ext_scalars"]
