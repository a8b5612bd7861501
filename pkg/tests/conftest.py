from pathlib import Path

import pytest

from weakbcc.enumeration import enumerate_order
from weakbcc.model import fixtures

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def corpus():
    return fixtures()


@pytest.fixture(scope="session")
def small_catalog():
    """Every weak BCC-algebra of order <= 4, one per isomorphism class."""
    return [a for n in range(1, 5) for a in enumerate_order(n).algebras()]


@pytest.fixture(scope="session")
def order5():
    return enumerate_order(5, jobs=None)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None:
        return
    lines = mod.summary_lines()
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
