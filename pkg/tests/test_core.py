import itertools
import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from hankeltensor import (
    dense_eval,
    entry,
    eval_form,
    eval_gradient_form,
    hadamard,
    make_hankel,
    to_dense,
)
from conftest import random_hankel

COUNTEREXAMPLE = make_hankel(4, 2, [1.0, 0.0, -1.0 / 6.0, 0.0, 1.0])


def brute_form(a, x):
    # enumeration over all index tuples, independent of the convolution path
    total = 0.0
    for idx in itertools.product(range(1, a.dim + 1), repeat=a.order):
        total += entry(a, idx) * math.prod(x[i - 1] for i in idx)
    return total


def brute_gradient(a, x):
    out = np.zeros(a.dim)
    for i in range(1, a.dim + 1):
        for rest in itertools.product(range(1, a.dim + 1), repeat=a.order - 1):
            out[i - 1] += entry(a, (i,) + rest) * math.prod(x[j - 1] for j in rest)
    return out


def test_make_hankel_validates():
    with pytest.raises(ValueError):
        make_hankel(1, 2, [0.0, 0.0, 0.0])
    with pytest.raises(ValueError):
        make_hankel(2, 1, [0.0, 0.0])
    with pytest.raises(ValueError):
        make_hankel(2, 2, [0.0, 0.0])  # needs length 3
    with pytest.raises(ValueError):
        make_hankel(2, 2, [0.0, np.nan, 0.0])


def test_gen_is_read_only():
    a = make_hankel(2, 2, [1.0, 2.0, 3.0])
    with pytest.raises(ValueError):
        a.gen[0] = 5.0


def test_entry_examples():
    assert entry(COUNTEREXAMPLE, [1, 1, 1, 1]) == 1.0
    assert entry(COUNTEREXAMPLE, [1, 1, 2, 2]) == -1.0 / 6.0
    assert entry(COUNTEREXAMPLE, [2, 2, 2, 2]) == 1.0
    b = make_hankel(2, 3, [0.0, 10.0, 20.0, 30.0, 40.0])
    assert entry(b, [2, 3]) == 30.0


def test_entry_symmetry(rng):
    a = random_hankel(rng, 3, 4)
    for _ in range(50):
        idx = tuple(rng.integers(1, 5, 3))
        for perm in itertools.permutations(idx):
            assert entry(a, perm) == entry(a, idx)


def test_entry_errors():
    with pytest.raises(ValueError):
        entry(COUNTEREXAMPLE, [1, 1, 1])
    with pytest.raises(IndexError):
        entry(COUNTEREXAMPLE, [1, 1, 1, 3])
    with pytest.raises(IndexError):
        entry(COUNTEREXAMPLE, [0, 1, 1, 1])


def test_eval_form_examples():
    # 2x2 Hankel matrix [[0,1],[1,2]] at (1,2): 0 + 2*1*2 + 4*2 = 12
    m = make_hankel(2, 2, [0.0, 1.0, 2.0])
    assert eval_form(m, [1.0, 2.0]) == pytest.approx(12.0, abs=1e-14)
    assert eval_form(COUNTEREXAMPLE, [1.0, 1.0]) == pytest.approx(1.0, abs=1e-14)
    assert eval_form(COUNTEREXAMPLE, [0.0, 0.0]) == 0.0


def test_eval_form_is_counterexample_polynomial(rng):
    for _ in range(100):
        x1, x2 = rng.uniform(-2, 2, 2)
        expect = x1**4 - x1**2 * x2**2 + x2**4
        assert eval_form(COUNTEREXAMPLE, [x1, x2]) == pytest.approx(expect, rel=1e-12, abs=1e-12)


def test_eval_form_matches_enumeration(rng):
    for _ in range(60):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 5))
        a = random_hankel(rng, order, dim)
        x = rng.uniform(-1, 1, dim)
        expect = brute_form(a, x)
        assert eval_form(a, x) == pytest.approx(expect, rel=1e-10, abs=1e-10)


def test_eval_form_homogeneity(rng):
    a = random_hankel(rng, 3, 3)
    x = rng.uniform(-1, 1, 3)
    c = 1.7
    assert eval_form(a, c * x) == pytest.approx(c**3 * eval_form(a, x), rel=1e-10)


def test_eval_form_rejects_bad_x():
    with pytest.raises(ValueError):
        eval_form(COUNTEREXAMPLE, [1.0])
    with pytest.raises(ValueError):
        eval_form(COUNTEREXAMPLE, [1.0, np.inf])


def test_gradient_examples():
    m = make_hankel(2, 2, [0.0, 1.0, 2.0])
    assert_allclose(eval_gradient_form(m, [1.0, 2.0]), [2.0, 5.0], atol=1e-14)
    assert_allclose(eval_gradient_form(COUNTEREXAMPLE, [1.0, 0.0]), [1.0, 0.0], atol=1e-14)


def test_gradient_matches_enumeration(rng):
    for _ in range(40):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 4))
        a = random_hankel(rng, order, dim)
        x = rng.uniform(-1, 1, dim)
        assert_allclose(eval_gradient_form(a, x), brute_gradient(a, x), rtol=1e-10, atol=1e-10)


def test_gradient_contraction_identity(rng):
    # x . (A x^(m-1)) = A x^m
    for _ in range(50):
        order = int(rng.integers(2, 6))
        dim = int(rng.integers(2, 5))
        a = random_hankel(rng, order, dim)
        x = rng.uniform(-1, 1, dim)
        assert np.dot(x, eval_gradient_form(a, x)) == pytest.approx(eval_form(a, x), rel=1e-10, abs=1e-12)


def test_hadamard_example():
    b = make_hankel(4, 2, [0.0, 0.0, 1.0, 0.0, 0.0])
    ab = hadamard(COUNTEREXAMPLE, b)
    assert_allclose(ab.gen, [0.0, 0.0, -1.0 / 6.0, 0.0, 0.0], atol=0)


def test_hadamard_algebra(rng):
    a = random_hankel(rng, 3, 3)
    b = random_hankel(rng, 3, 3)
    c = random_hankel(rng, 3, 3)
    assert_allclose(hadamard(a, b).gen, hadamard(b, a).gen, atol=0)
    assert_allclose(hadamard(hadamard(a, b), c).gen, hadamard(a, hadamard(b, c)).gen, rtol=1e-15)
    with pytest.raises(ValueError):
        hadamard(a, random_hankel(rng, 3, 4))
    with pytest.raises(ValueError):
        hadamard(a, random_hankel(rng, 2, 3))


def test_to_dense_matrix_case():
    m = make_hankel(2, 2, [0.0, 1.0, 2.0])
    assert_allclose(to_dense(m).entries, [0.0, 1.0, 1.0, 2.0], atol=0)


def test_to_dense_counterexample_slots():
    d = to_dense(COUNTEREXAMPLE)
    assert d.entries.shape == (16,)
    assert np.sum(d.entries == -1.0 / 6.0) == 6  # six entries read slot 2
    assert np.sum(d.entries == 1.0) == 2


def test_to_dense_agrees_with_entry(rng):
    a = random_hankel(rng, 3, 3)
    d = to_dense(a)
    for flat, idx in enumerate(itertools.product(range(1, 4), repeat=3)):
        assert d.entries[flat] == entry(a, idx)


def test_to_dense_capacity():
    a = make_hankel(8, 10, np.zeros(73))
    with pytest.raises(ValueError):
        to_dense(a)


def test_dense_eval_matches_fast_path(rng):
    for _ in range(20):
        order = int(rng.integers(2, 5))
        dim = int(rng.integers(2, 4))
        a = random_hankel(rng, order, dim)
        x = rng.uniform(-1, 1, dim)
        assert dense_eval(to_dense(a), x) == pytest.approx(eval_form(a, x), rel=1e-10, abs=1e-12)
