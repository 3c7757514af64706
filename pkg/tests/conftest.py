from __future__ import annotations

import os
import random
from fractions import Fraction

import pytest
from hypothesis import settings

from walab.rootsys import DELIGNE_SERIES, build

SEED = int(os.environ.get("WALAB_SEED", "20261015"))

settings.register_profile("walab", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("walab")


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture(params=DELIGNE_SERIES)
def rs(request):
    return build(request.param)


def random_fraction(rng: random.Random, num: int = 30, den: int = 12) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_weight(rng: random.Random, rank: int, num: int = 6, den: int = 5):
    return tuple(random_fraction(rng, num, den) for _ in range(rank))


def random_noncritical_level(rng: random.Random, h_check: int) -> Fraction:
    while True:
        k = random_fraction(rng)
        if k + h_check != 0:
            return k


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
