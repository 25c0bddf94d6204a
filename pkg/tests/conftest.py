from math import gcd

import pytest

from cfdedekind import Fraction

ACCEPTANCE_LINES: list[str] = []


def small_pairs(max_b):
    return [Fraction(a, b) for b in range(2, max_b + 1) for a in range(1, b) if gcd(a, b) == 1]


@pytest.fixture(scope="session")
def pairs_50():
    return small_pairs(50)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
