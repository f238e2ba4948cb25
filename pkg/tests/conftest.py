import pytest

from treecast.families import gen_caterpillar, gen_double_spider, gen_perfect_kary, gen_spider
from treecast.tree import build_tree

import util


def pytest_terminal_summary(terminalreporter):
    if util.ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in util.ACCEPTANCE_LINES:
            terminalreporter.line(line)


@pytest.fixture
def path4():
    return build_tree(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def star5():
    # K_{1,4}, center 0
    return build_tree(5, [(0, i) for i in range(1, 5)])


@pytest.fixture
def binary2():
    return gen_perfect_kary(2, 2)


@pytest.fixture
def binary3():
    return gen_perfect_kary(2, 3)


@pytest.fixture
def spider223():
    return gen_spider((2, 2, 3))


@pytest.fixture
def cat_mixed():
    return gen_caterpillar(4, (2, 0, 1, 1))


@pytest.fixture
def ds_ref20():
    # the 20-vertex reference double spider
    return gen_double_spider((1, 2, 2), (3, 3, 3), 5)
