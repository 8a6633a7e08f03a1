from fractions import Fraction

import pytest
from hypothesis import strategies as st

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number, name, passed, detail=""):
        status = "PASS" if passed else "FAIL"
        ACCEPTANCE_LINES.append(f"criterion {number:>3}  {status}  {name}" + (f"  ({detail})" if detail else ""))
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def rationals(lo, hi, max_den=1000):
    """Hypothesis strategy for Fractions in [lo, hi] with bounded denominator."""
    lo, hi = Fraction(lo), Fraction(hi)
    return st.integers(0, max_den).map(lambda k: lo + (hi - lo) * Fraction(k, max_den))
