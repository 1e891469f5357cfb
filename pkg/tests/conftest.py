import random

import pytest

from equichern.groups import cyclic_group, symmetric_group
from equichern.models import p1_rotation, small_groups


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def catalogue():
    return small_groups()


@pytest.fixture
def p1rot():
    return p1_rotation(4)


@pytest.fixture
def rng():
    return random.Random(20261014)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)
