import numpy as np
import pytest

from hankeltensor import DiscreteMeasure, VandermondeDecomposition, make_hankel


def random_hankel(rng, order, dim, scale=1.0):
    gen = rng.uniform(-scale, scale, (dim - 1) * order + 1)
    return make_hankel(order, dim, gen)


def distinct_nodes(rng, count, low=-1.0, high=1.0, sep=0.05):
    while True:
        nodes = rng.uniform(low, high, count)
        if count < 2 or np.min(np.diff(np.sort(nodes))) >= sep:
            return nodes


def random_measure(rng, max_nodes=6):
    k = int(rng.integers(1, max_nodes + 1))
    return DiscreteMeasure(distinct_nodes(rng, k), rng.uniform(0.0, 1.0, k))


def random_positive_decomposition(rng, max_terms=5):
    k = int(rng.integers(1, max_terms + 1))
    return VandermondeDecomposition(distinct_nodes(rng, k), rng.uniform(0.2, 1.0, k))


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
