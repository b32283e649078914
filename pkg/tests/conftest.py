import json
from pathlib import Path

import pytest

from pingpong import config
from pingpong.realize import standard_realization

FIXTURES = Path(__file__).parent / "fixtures"


def load(name):
    return config.from_dict(json.loads((FIXTURES / name).read_text()))


@pytest.fixture(scope="session")
def schottky():
    return load("schottky.json")


@pytest.fixture(scope="session")
def exotic():
    return load("exotic.json")


@pytest.fixture(scope="session")
def rank3():
    return load("rank3.json")


@pytest.fixture(scope="session")
def schottky_r(schottky):
    return standard_realization(schottky)


@pytest.fixture(scope="session")
def exotic_r(exotic):
    return standard_realization(exotic)
