"""
Shared fixtures: src/ on the path, the shipped catalog and a seeded RNG
for the randomized algebra checks (override with --seed).
"""

import os
import random
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from families import Catalog  # noqa: E402
from main import DEFAULT_SEED  # noqa: E402

GOLDEN_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "golden")


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=DEFAULT_SEED, help="seed for randomized property tests")


@pytest.fixture
def rng(request) -> random.Random:
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture(scope="session")
def catalog() -> Catalog:
    return Catalog.from_file()


@pytest.fixture
def golden():
    def read(name: str) -> str:
        with open(os.path.join(GOLDEN_DIR, name), encoding="utf-8") as f:
            return f.read()

    return read
