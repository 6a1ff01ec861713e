import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from orthorep.algebra import Quiver, path_algebra
from orthorep.decompose import AddSet
from orthorep.module import regular_module
from orthorep.nakayama import bridge
from orthorep.orthosym import IndecCatalogue


@pytest.fixture(scope="session")
def a37():
    B = bridge((3, 2))
    return B, IndecCatalogue.from_bridge(B)


@pytest.fixture(scope="session")
def a25():
    B = bridge((2, 2))
    return B, IndecCatalogue.from_bridge(B)


@pytest.fixture(scope="session")
def a310():
    B = bridge((3, 3))
    return B, IndecCatalogue.from_bridge(B)


@pytest.fixture(scope="session")
def a2():
    """Path algebra of 0 -> 1."""
    return path_algebra(Quiver(2, ((0, 1),)))


def with_regular(B, *labels) -> AddSet:
    return AddSet.of(regular_module(B.algebra), *[B(x) for x in labels])


@pytest.fixture(scope="session")
def m1(a37):
    B, _ = a37
    return with_regular(B, (0, 1), (2, 6), (0, 2), (0, 5))


@pytest.fixture(scope="session")
def m2(a37):
    B, _ = a37
    return with_regular(B, (1, 1), (0, 6), (0, 2), (0, 5))
