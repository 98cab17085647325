import numpy as np
import pytest

from cosconv import Group, Signal
from cosconv.rng import SplitMix64

# filled by test_acceptance.py: criterion number -> (title, passed, detail)
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {num}. {title}: {detail}")


@pytest.fixture
def rng():
    return SplitMix64(20240531)


def rand_signal(rng, g, nonnegative=False):
    v = rng.random(g.size) if nonnegative else rng.uniform(g.size)
    return Signal(g, v)


@pytest.fixture
def z4():
    return Group.cyclic(4)


def sig(g, values):
    return Signal(g, np.asarray(values, dtype=float))
