import random

import pytest

from qtchar import YtAlgebra, algebra
from qtchar.algebra import Monomial, YtElement
from qtchar.tpoly import TPoly


@pytest.fixture(scope="session")
def sl2():
    return algebra("A1")


@pytest.fixture(scope="session")
def a2():
    return algebra("A2")


@pytest.fixture(scope="session")
def b2():
    return algebra("B2")


@pytest.fixture(scope="session")
def g2():
    return algebra("G2")


def random_element(alg: YtAlgebra, rng: random.Random, terms=3) -> YtElement:
    total = YtElement.zero()
    for _ in range(rng.randrange(1, terms + 1)):
        d = {}
        for _ in range(rng.randrange(1, 4)):
            key = (rng.choice(list(alg.cartan.nodes())), rng.randrange(-4, 5))
            d[key] = d.get(key, 0) + rng.choice([-2, -1, 1, 2])
        coeff = TPoly({rng.randrange(-3, 4): rng.choice([-2, -1, 1, 2])})
        total = total + YtElement.from_monomial(Monomial(d), coeff)
    return total
