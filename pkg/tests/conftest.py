import sys
from pathlib import Path

import pytest

from qpcat.ginzburg import ginzburg
from qpcat.gqa import make_quiver
from qpcat.potential import Potential

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).resolve().parents[1] / "data"


@pytest.fixture
def example_quiver():
    # 1 -a-> 2 -c-> 3 -b-> 1 with |a| = -1
    return make_quiver([1, 2, 3], [("a", 1, 2, -1), ("b", 3, 1, 0), ("c", 2, 3, 0)])


@pytest.fixture
def example_potential(example_quiver):
    q = example_quiver
    return Potential.from_terms(q, 4, [(1, q.path("a", "b", "c"))])


@pytest.fixture
def example_pres(example_potential):
    return ginzburg(example_potential)


@pytest.fixture
def example_file():
    return str(DATA / "example34.qp")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
