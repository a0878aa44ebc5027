import pytest

from pseudoreal.cyclotomic import field
from pseudoreal.primitive import build_a5, build_hessian, hessian_generators


@pytest.fixture(scope="session")
def hess216():
    return build_hessian(216)


@pytest.fixture(scope="session")
def hess72():
    return build_hessian(72)


@pytest.fixture(scope="session")
def hess36():
    return build_hessian(36)


@pytest.fixture(scope="session")
def a5():
    return build_a5()


@pytest.fixture(scope="session")
def hgens():
    return hessian_generators()


@pytest.fixture
def K20():
    return field(20)
