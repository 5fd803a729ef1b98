import pytest

from sheafcalc import registry


@pytest.fixture(scope="session")
def reg():
    return registry.load_registry()


@pytest.fixture(scope="session")
def registry_text():
    from sheafcalc.registry import default_registry_path

    return default_registry_path().read_text()
