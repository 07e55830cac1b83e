import pytest

from relaus.reproduce import Fixtures


@pytest.fixture(scope="session")
def fx():
    return Fixtures()


@pytest.fixture(scope="session")
def fx7():
    return Fixtures(field_spec="GF:7")
