import random
from fractions import Fraction

import pytest

from coble import BinForm, discriminant, involution_from_fixed_quadratic


def rand_quadratic(rng: random.Random, lo: int = -9, hi: int = 9) -> BinForm:
    while True:
        coeffs = [rng.randint(lo, hi) for _ in range(3)]
        if any(coeffs):
            return BinForm(coeffs)


def rand_squarefree_quadratic(rng: random.Random) -> BinForm:
    while True:
        f = rand_quadratic(rng)
        if discriminant(f) != 0:
            return f


def rand_involution(rng: random.Random):
    return involution_from_fixed_quadratic(rand_squarefree_quadratic(rng))


def rand_nonzero(rng: random.Random) -> Fraction:
    while True:
        value = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        if value:
            return value


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240831)
