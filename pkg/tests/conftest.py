import random

import pytest

from qlform.gf2poly import Polynomial2, RationalFunction
from qlform.towers import element0, make_base_field


@pytest.fixture
def F2():
    """GF(2)(t1, t2)."""
    return make_base_field(["t1", "t2"])


@pytest.fixture
def F3():
    """GF(2)(t1, t2, t3)."""
    return make_base_field(["t1", "t2", "t3"])


def random_poly(rng: random.Random, arity: int, max_terms=3, max_degree=3, allow_zero=False):
    while True:
        vecs = []
        for _ in range(1 + rng.randrange(max_terms)):
            exps = [0] * arity
            for _ in range(rng.randrange(max_degree + 1)):
                exps[rng.randrange(arity)] += 1
            vecs.append(tuple(exps))
        p = Polynomial2.from_exponents(vecs, arity)
        if allow_zero or not p.is_zero:
            return p


def random_rational(rng, arity, max_terms=3, max_degree=3, allow_zero=True):
    num = random_poly(rng, arity, max_terms, max_degree, allow_zero=allow_zero)
    den = random_poly(rng, arity, max_terms, max_degree)
    return RationalFunction(num, den)


def random_element(rng, K, max_terms=2, max_degree=2, allow_zero=True):
    """Random element of the tower, mixing in adjoined roots when present."""
    acc = element0(random_rational(rng, K.trdeg, max_terms, max_degree, allow_zero))
    for level in range(1, K.depth + 1):
        if rng.randrange(2):
            coef = element0(random_rational(rng, K.trdeg, max_terms, max_degree))
            acc = K.add(acc, K.mul(coef, K.root(level)))
    return acc
