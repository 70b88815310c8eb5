import os
import random
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from monodromy.constellation import Constellation, generic_polynomial, monomial  # noqa: E402

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data', 'constellations')


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def z2():
    return monomial(2)


@pytest.fixture
def z3():
    return monomial(3)


@pytest.fixture
def generic3():
    return generic_polynomial(3)


@pytest.fixture
def generic3b():
    return Constellation.from_cycles(3, ['(1 2)', '(1 3 2)', '(2 3)'])


@pytest.fixture
def random_constellation():
    """Factory for random valid sphere constellations of degree <= max_degree"""
    from hurwitz.braid import braid_move
    from monodromy.constellation import chebyshev_polynomial
    from surgery.connected_sum import sum_of_quadratics

    def build(rng: random.Random, max_degree: int = 6, min_degree: int = 1):
        degree = rng.randint(min_degree, max_degree)
        if degree == 1:
            return monomial(1)
        builder = rng.choice([generic_polynomial, monomial, chebyshev_polynomial, sum_of_quadratics])
        c = builder(degree)
        for _ in range(rng.randint(0, 4)):
            if len(c.branches) > 1:
                c = braid_move(c, rng.randint(1, len(c.branches) - 1))
        sheets = list(range(1, degree + 1))
        rng.shuffle(sheets)
        return c.relabel({i: s for i, s in enumerate(sheets, 1)})

    return build
