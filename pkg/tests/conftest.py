"""Shared fixtures for the test suite"""

import os
import random
import sys

import pytest

# Add repository root to path
ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, ROOT)

from rating.comparison import ComparisonMatrix, validate  # noqa: E402
from tests.helpers import FOUR_ROWS  # noqa: E402
from tropical.matrix import TropicalMatrix  # noqa: E402

SAMPLES = os.path.join(ROOT, "samples")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale checks over seeded corpora")


@pytest.fixture
def four_matrix() -> TropicalMatrix:
    return TropicalMatrix.from_rows(FOUR_ROWS)


@pytest.fixture
def four_comparison(four_matrix) -> ComparisonMatrix:
    return validate(four_matrix)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def samples_dir() -> str:
    return SAMPLES
