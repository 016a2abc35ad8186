import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from instances import FOUR, FOURTEEN, TEN

from unihyper import Hypergraph


@pytest.fixture
def ten():
    return Hypergraph(TEN, range(1, 11))


@pytest.fixture
def fourteen():
    return Hypergraph(FOURTEEN, range(1, 15))


@pytest.fixture
def four():
    return Hypergraph(FOUR, range(1, 5))


@pytest.fixture
def triple():
    return Hypergraph([(1, 2, 3)])


@pytest.fixture
def chain6():
    return Hypergraph([(1, 2, 3), (3, 4), (4, 5, 6)])


@pytest.fixture
def barbell():
    left = [(a, b) for a in range(1, 5) for b in range(a + 1, 5)]
    right = [(a, b) for a in range(5, 9) for b in range(a + 1, 9)]
    return Hypergraph(left + right + [(4, 5)])


def pytest_terminal_summary(terminalreporter):
    from criteria import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        ok, detail = RESULTS[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
