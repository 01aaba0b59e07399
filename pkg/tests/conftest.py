"""Shared helpers for the test suite."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

import pytest


def all_perms(n: int) -> Iterator[tuple[int, ...]]:
    """Every permutation of 1..n in one-line notation."""
    return itertools.permutations(range(1, n + 1))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240817)
