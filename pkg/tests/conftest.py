import pytest

from composites.composite import field_composite, z_in_q, z_localized
from composites.fieldtower import funcfield, funcsub, gf, make_extension, numberfield, q


@pytest.fixture(scope="session")
def gf2():
    return gf(2)


@pytest.fixture(scope="session")
def gf4():
    return gf(2, 2)


@pytest.fixture(scope="session")
def gf3():
    return gf(3)


@pytest.fixture(scope="session")
def gf9():
    return gf(3, 2)


@pytest.fixture(scope="session")
def rationals():
    return q()


@pytest.fixture(scope="session")
def cube_root_two():
    return numberfield([-2, 0, 0, 1])


@pytest.fixture(scope="session")
def f2t():
    return funcfield(2)


@pytest.fixture(scope="session")
def f2t2():
    return funcsub(2, 1)


@pytest.fixture(scope="session")
def proper_pair(gf2, gf4):
    return make_extension(gf2, gf4)


@pytest.fixture(scope="session")
def inseparable_pair(f2t2, f2t):
    return make_extension(f2t2, f2t)


@pytest.fixture(scope="session")
def proper_ring(gf2, gf4):
    """GF(2) + X*GF(4)[X]"""
    return field_composite(gf2, gf4)


@pytest.fixture(scope="session")
def identity_ring(gf2):
    return field_composite(gf2, gf2)


@pytest.fixture(scope="session")
def inseparable_ring(f2t2, f2t):
    return field_composite(f2t2, f2t)


@pytest.fixture(scope="session")
def z_ring():
    return z_in_q()


@pytest.fixture(scope="session")
def z3_ring():
    return z_localized([3])
