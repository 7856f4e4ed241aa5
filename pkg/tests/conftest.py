import random
from fractions import Fraction

import pytest

from monogen.algebra import (
    OrderPresentation,
    StructureAlgebra,
    power_basis_algebra,
    split_algebra,
)
from monogen.exactring import ZZ
from monogen.fixtures import corpus_files, load_fixture


@pytest.fixture(scope="session")
def corpus():
    """All corpus fixtures as (name, algebra, expected) triples."""
    out = []
    for path in corpus_files():
        alg, expected = load_fixture(path)
        out.append((path.stem, alg, expected))
    return out


@pytest.fixture(scope="session")
def corpus_z(corpus):
    return [(n, a, e) for n, a, e in corpus if a.base.kind == "Z"]


def dedekind_order():
    h = Fraction(1, 2)
    return OrderPresentation(
        [-8, -2, -1, 1], [[1, 0, 0], [0, h, h], [0, 0, 1]]
    ).to_algebra("dedekind")


def gaussian_order():
    return power_basis_algebra([1, 0, 1], "Z[i]")


def random_monic(rng, degree):
    return [rng.randint(-6, 6) for _ in range(degree)] + [1]


def random_unimodular(rng, n, fix_first_row=False):
    """Product of random elementary matrices; det is +-1 by construction."""
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    start = 1 if fix_first_row else 0
    for _ in range(2 * n):
        i = rng.randrange(start, n)
        j = rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            U[i][k] += c * U[j][k]
    return U


def random_algebra(rng, max_rank=4, keep_identity_first=True):
    """Random valid integer algebra: a power basis, optionally rebased.

    With keep_identity_first the first basis element stays 1, so the
    translation-invariance property applies.
    """
    n = rng.randint(2, max_rank)
    alg = power_basis_algebra(random_monic(rng, n), f"random deg {n}")
    if rng.random() < 0.5:
        U = random_unimodular(rng, n, fix_first_row=keep_identity_first)
        alg = alg.change_basis(U)
        alg.require_valid()
    return alg


@pytest.fixture
def rng():
    return random.Random(20240817)
