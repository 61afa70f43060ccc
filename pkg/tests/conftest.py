import pytest

from peiffer.catalog import enumerate_family


@pytest.fixture(scope="session")
def family():
    """All mutual-action pairs over the catalog with |M||N| <= 36.

    Shared across modules: the enumeration also builds both Peiffer
    products per pair, which is the expensive part.
    """
    return enumerate_family()
