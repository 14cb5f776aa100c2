"""Pytest configuration for tests."""

import pytest
from hypothesis import settings

from bookmaker import ContingencyRates, from_counts, normalize

# No per-example deadline for the identity suites
settings.register_profile("bookmaker", deadline=None)
settings.load_profile("bookmaker")


@pytest.fixture
def worked_table() -> ContingencyRates:
    """The (40, 10, 20, 30) table used throughout the docs."""
    return normalize(from_counts(40, 10, 20, 30))


@pytest.fixture
def perfect_table() -> ContingencyRates:
    return normalize(from_counts(50, 0, 0, 50))


@pytest.fixture
def chance_table() -> ContingencyRates:
    return normalize(from_counts(25, 25, 25, 25))


@pytest.fixture
def worst_table() -> ContingencyRates:
    return normalize(from_counts(0, 50, 50, 0))
