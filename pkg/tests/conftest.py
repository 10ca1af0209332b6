"""
Pytest Configuration and Fixtures

This file contains shared fixtures used across all test files:
the worked-example elements, seeded randomness and service instances
wired for single-process folds.
"""
import random

import pytest

from app.application import (
    DistributionService,
    RegistryService,
    SelftestService,
    VerificationService,
)
from app.domain.elements import parse_element
from app.infrastructure.folding import HistogramFold


# ============================================================
# MARKERS
# ============================================================

def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run the full-size timing tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size timing test, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


# ============================================================
# ELEMENT FIXTURES
# ============================================================

@pytest.fixture
def signed_example():
    """3̄ 1 6̄ 2 5̄ 4̄ in B_6, the signed worked example."""
    return parse_element("-3 1 -6 2 -5 -4", 2)


@pytest.fixture
def colored_example():
    """2^[1] 1^[3] 5 4 3^[2] in G(4,5), the colored worked example."""
    return parse_element("2[1] 1[3] 5 4 3[2]", 4)


@pytest.fixture
def rng():
    """Seeded generator so randomized properties are reproducible."""
    return random.Random(20240611)


# ============================================================
# SERVICE FIXTURES
# ============================================================

@pytest.fixture
def folder():
    """Sequential fold engine."""
    return HistogramFold(threads=1, parallel_threshold=10**9)


@pytest.fixture
def registry():
    return RegistryService()


@pytest.fixture
def verifier(registry, folder):
    return VerificationService(registry=registry, folder=folder)


@pytest.fixture
def distributions(folder):
    return DistributionService(folder=folder)


@pytest.fixture
def selftest(distributions, verifier):
    return SelftestService(distributions=distributions, verifier=verifier)
