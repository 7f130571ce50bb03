import pytest

from comather.chow import FlagSpace
from comather.config import get_settings


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow table recomputations")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    monkeypatch.delenv("COMATHER_CACHE_DIR", raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def gr24():
    return FlagSpace.parse("A3/P2")


@pytest.fixture
def gr36():
    return FlagSpace.parse("A5/P3")


@pytest.fixture
def lg24():
    return FlagSpace.parse("C2/P2")


@pytest.fixture
def lg36():
    return FlagSpace.parse("C3/P3")


@pytest.fixture
def lg48():
    return FlagSpace.parse("C4/P4")


@pytest.fixture
def fl4():
    return FlagSpace.parse("A3/B")


@pytest.fixture
def c2b():
    return FlagSpace.parse("C2/B")
