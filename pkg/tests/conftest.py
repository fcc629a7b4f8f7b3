from __future__ import annotations

import sys
from fractions import Fraction as Fr
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from leonard.parray import ParameterArray  # noqa: E402

ACCEPTANCE_LINES: list = []


def make_pa_a() -> ParameterArray:
    h = Fr(1, 2)
    ev = [-3 * h, -h, h, 3 * h]
    return ParameterArray.build(ev, ev, [-3 * h, -2, -3 * h], [3 * h, 2, 3 * h])


def make_pa_b() -> ParameterArray:
    return ParameterArray.build(
        [Fr(-15, 2), Fr(-1, 2), Fr(9, 2), Fr(15, 2)],
        [Fr(-3, 2), Fr(-9, 10), Fr(1, 10), Fr(3, 2)],
        [Fr(-15, 2), Fr(-54, 5), Fr(-15, 2)],
        [Fr(3, 2), Fr(46, 5), Fr(27, 2)],
    )


@pytest.fixture
def pa_a():
    return make_pa_a()


@pytest.fixture
def pa_b():
    return make_pa_b()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
