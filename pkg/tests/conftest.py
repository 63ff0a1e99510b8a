import pytest

from pgdeg.corpus import chaotic_groupoid, na
from pgdeg.groups import cyclic_group, symmetric_group


@pytest.fixture(scope="session")
def NA():
    return na()


@pytest.fixture(scope="session")
def S3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def C2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def bc2_pg():
    """B C2 as an explicit word-presented partial groupoid."""
    from pgdeg.corpus import group_nerve_pg
    return group_nerve_pg(cyclic_group(2))


@pytest.fixture(scope="session")
def chaotic2():
    return chaotic_groupoid(2)
