import random

import pytest

from _helpers import MOD5_4


@pytest.fixture
def rng():
    return random.Random(0xC11F)


@pytest.fixture(scope="session")
def mod5_4_text():
    return MOD5_4.read_text(encoding="utf-8")
