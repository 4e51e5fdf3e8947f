import pytest

from matsuo2 import fischer, matsuo


@pytest.fixture(scope="session")
def spaces():
    return {name: fischer.catalog(name) for name in fischer.CATALOG_NAMES}


@pytest.fixture(scope="session")
def algebras(spaces):
    return {name: matsuo.build(sp) for name, sp in spaces.items()}


@pytest.fixture(scope="session")
def reduced_algebras(algebras):
    return {name: matsuo.reduce(a) for name, a in algebras.items()}
