import pytest

from mskit.fields import PrimeField, QQ
from mskit.samples import (
    example_algebra,
    example_configuration,
    exterior_type,
    special_biserial_two_loops,
    truncated_polynomial,
)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def F7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def cfg_ex():
    return example_configuration()


@pytest.fixture(scope="session")
def alg_ex():
    return example_algebra(QQ)


@pytest.fixture(scope="session")
def ka3():
    return truncated_polynomial(QQ)


@pytest.fixture(scope="session")
def ext():
    return exterior_type(QQ)


@pytest.fixture(scope="session")
def biserial():
    return special_biserial_two_loops(QQ)
