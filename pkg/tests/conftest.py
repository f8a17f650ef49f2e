import pytest

from qgeom import (
    coordinate_hyperplane,
    f_certificate,
    field_new,
    jt_design,
    pg_design,
    polarity_new,
    twisted_grassmann,
)


@pytest.fixture(scope="session")
def f2():
    return field_new(2)


@pytest.fixture(scope="session")
def f3():
    return field_new(3)


@pytest.fixture(scope="session")
def f4():
    return field_new(2, 2)


@pytest.fixture(scope="session")
def setting22(f2):
    h = coordinate_hyperplane(f2, 5)
    return f2, h, polarity_new(f2, h)


@pytest.fixture(scope="session")
def tg22(setting22):
    field, h, s = setting22
    return twisted_grassmann(field, 2, h, s)


@pytest.fixture(scope="session")
def jt22(setting22):
    field, h, s = setting22
    return jt_design(field, 2, h, s)


@pytest.fixture(scope="session")
def pg22(f2):
    return pg_design(f2, 2)


@pytest.fixture(scope="session")
def cert22(setting22, tg22, jt22):
    field, h, s = setting22
    return f_certificate(tg22, jt22, h, s)


@pytest.fixture(scope="session")
def setting32(f3):
    h = coordinate_hyperplane(f3, 5)
    return f3, h, polarity_new(f3, h)


@pytest.fixture(scope="session")
def tg32(setting32):
    field, h, s = setting32
    return twisted_grassmann(field, 2, h, s)


@pytest.fixture(scope="session")
def jt32(setting32):
    field, h, s = setting32
    return jt_design(field, 2, h, s)
