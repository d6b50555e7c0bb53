from __future__ import annotations

from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

from lifetime_topos.algebra import Bounds, Lifetime

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")

B10 = Bounds(10, 10)
FIXTURES = Path(__file__).parent / "fixtures"
REPO = Path(__file__).parent.parent

ACCEPTANCE_LINES: list[str] = []


def P(x1, x2, bounds=B10) -> Lifetime:
    return Lifetime(x1, x2, bounds)


def coords(upper=10):
    return st.builds(
        lambda d, n: Fraction(n % (upper * d + 1), d),
        st.sampled_from([1, 2, 3, 4, 7]),
        st.integers(min_value=0, max_value=10_000),
    )


def lifetimes(bounds=B10):
    return st.builds(lambda a, b: Lifetime(a, b, bounds), coords(), coords())


@pytest.fixture
def b10():
    return B10


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
