import random

import pytest

from gridlock.geometry import BoardSize, GridPoint


@pytest.fixture
def rng():
    return random.Random(0x5EED)


@pytest.fixture
def tmp_cache(tmp_path):
    from gridlock.cache import ResultsCache

    return ResultsCache(tmp_path / "cache")


def random_points(rng, n: int, k: int) -> list[GridPoint]:
    cells = [GridPoint(x, y) for x in range(1, n + 1) for y in range(1, n + 1)]
    return rng.sample(cells, k)


def small_boards():
    return [BoardSize(n) for n in range(1, 7)]
