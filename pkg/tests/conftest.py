import random
from fractions import Fraction

import pytest

from tverberg import Vector


def rand_point(rng: random.Random, dim: int, lo: int = -100, hi: int = 100) -> Vector:
    return Vector(tuple(rng.randint(lo, hi) for _ in range(dim)))


def rand_points(rng: random.Random, count: int, dim: int, lo: int = -100, hi: int = 100):
    return [rand_point(rng, dim, lo, hi) for _ in range(count)]


def rand_convex_weights(rng: random.Random, count: int):
    """Exact random convex weights: integer masses normalized by their sum."""
    masses = [rng.randint(0, 9) for _ in range(count)]
    if sum(masses) == 0:
        masses[rng.randrange(count)] = 1
    total = sum(masses)
    return [Fraction(m, total) for m in masses]


@pytest.fixture
def rng():
    return random.Random(20260811)
