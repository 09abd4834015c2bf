import pytest

from nervelab.algebra import (
    cyclic_monoid,
    symmetric_monoid,
    zero_monoid,
)
from nervelab.constructions import point, simplicial_circle


@pytest.fixture(scope="session")
def z2():
    return cyclic_monoid(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_monoid(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic_monoid(4)


@pytest.fixture(scope="session")
def s3():
    return symmetric_monoid(3)


@pytest.fixture(scope="session")
def m0():
    return zero_monoid()


@pytest.fixture(scope="session")
def circle():
    return simplicial_circle(4)


@pytest.fixture(scope="session")
def pt():
    return point(4)
