import pytest

from hyperideal import fixtures


@pytest.fixture(scope="session")
def paper():
    return fixtures("paper-example")


@pytest.fixture(scope="session")
def z2():
    return fixtures("z2")


@pytest.fixture(scope="session")
def z4():
    return fixtures("z4")


@pytest.fixture(scope="session")
def z6():
    return fixtures("z6")


@pytest.fixture(scope="session")
def z12():
    return fixtures("z12")


@pytest.fixture(scope="session")
def all_fixture_rings():
    from hyperideal import FIXTURE_NAMES

    return [fixtures(name) for name in FIXTURE_NAMES]
