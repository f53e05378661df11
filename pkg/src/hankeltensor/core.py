"""Hankel tensor construction and evaluation.

An order-``m`` dimensional-``n`` Hankel tensor is determined by a generating
vector ``v`` of length ``(n-1)*m + 1``: the entry at (1-based) index
``(i_1, ..., i_m)`` is ``v[i_1 + ... + i_m - m]``.  Forms and gradients are
evaluated through polynomial coefficient convolutions, which keeps the cost
polynomial in ``m`` and ``n``; a dense enumeration path is kept as ground
truth for testing.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

_DENSE_CAP = 10**7


def _as_finite_vector(x, name):
    arr = np.asarray(x, dtype=float)
    if arr.ndim != 1:
        raise ValueError(f"{name} must be a one-dimensional real vector")
    if not np.all(np.isfinite(arr)):
        raise ValueError(f"{name} must contain only finite values")
    return arr


@dataclass(frozen=True)
class HankelTensor:
    """Symmetric Hankel tensor held by its generating vector.

    Immutable after construction; the generating vector is stored read-only.
    """

    order: int
    dim: int
    gen: np.ndarray

    def __post_init__(self):
        if self.order < 2 or self.dim < 2:
            raise ValueError("order and dim must both be at least 2")
        gen = _as_finite_vector(self.gen, "gen")
        expect = (self.dim - 1) * self.order + 1
        if gen.shape[0] != expect:
            raise ValueError(
                f"generating vector has length {gen.shape[0]}, "
                f"expected (dim-1)*order+1 = {expect}"
            )
        gen = gen.copy()
        gen.flags.writeable = False
        object.__setattr__(self, "gen", gen)


@dataclass(frozen=True)
class DenseSymmetricTensor:
    """Fully materialised symmetric tensor (row-major flat entries)."""

    order: int
    dim: int
    entries: np.ndarray

    def __post_init__(self):
        size = self.dim**self.order
        if size > _DENSE_CAP:
            raise ValueError(f"dense size {size} exceeds the cap {_DENSE_CAP}")
        entries = _as_finite_vector(self.entries, "entries")
        if entries.shape[0] != size:
            raise ValueError(f"entries has length {entries.shape[0]}, expected {size}")
        entries = entries.copy()
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)


def make_hankel(order, dim, gen):
    """Build a :class:`HankelTensor` from its generating vector."""
    return HankelTensor(order, dim, gen)


def entry(a, index):
    """Entry of ``a`` at a 1-based multi-index.

    Parameters
    ----------
    a : HankelTensor
    index : sequence of int
        ``order`` many indices, each in ``1..dim``.

    Returns
    -------
    float
        ``gen[i_1 + ... + i_m - m]``.
    """
    idx = list(index)
    if len(idx) != a.order:
        raise ValueError(f"index has {len(idx)} entries, expected order = {a.order}")
    for i in idx:
        if not (1 <= i <= a.dim):
            raise IndexError(f"index component {i} outside 1..{a.dim}")
    return float(a.gen[sum(idx) - a.order])


def _check_x(a, x):
    x = _as_finite_vector(x, "x")
    if x.shape[0] != a.dim:
        raise ValueError(f"x has length {x.shape[0]}, expected dim = {a.dim}")
    return x


def _power_coeffs(x, power):
    """Coefficients of p(t)**power with p(t) = sum_i x[i] t^i."""
    c = np.array([1.0]) if power == 0 else x
    for _ in range(power - 1):
        c = np.convolve(c, x)
    return c


def eval_form(a, x):
    """Evaluate the homogeneous form A x^m.

    Expands p(t) = sum_i x_i t^(i-1); then A x^m = sum_k gen[k] * [t^k] p(t)^m,
    so only m-1 coefficient convolutions are needed.
    """
    x = _check_x(a, x)
    return float(np.dot(a.gen, _power_coeffs(x, a.order)))


def eval_gradient_form(a, x):
    """Evaluate A x^(m-1), the gradient of the form divided by m.

    Component i is sum_k gen[i-1+k] * [t^k] p(t)^(m-1), a sliding correlation
    of the generating vector with the coefficients of p(t)^(m-1).
    """
    x = _check_x(a, x)
    d = _power_coeffs(x, a.order - 1)
    return np.correlate(a.gen, d, mode="valid")


def hadamard(a, b):
    """Hadamard (entrywise) product; generating vectors multiply componentwise."""
    if a.order != b.order or a.dim != b.dim:
        raise ValueError("operands must share order and dim")
    return HankelTensor(a.order, a.dim, np.asarray(a.gen) * np.asarray(b.gen))

def to_dense(a):
    """Materialise every entry (index-sum lookup into the generating vector)."""
    size = a.dim**a.order
    if size > _DENSE_CAP:
        raise ValueError(f"dense size {size} exceeds the cap {_DENSE_CAP}")
    sums = np.zeros(1, dtype=np.int64)
    for _ in range(a.order):
        sums = (sums[:, None] + np.arange(a.dim, dtype=np.int64)[None, :]).ravel()
    return DenseSymmetricTensor(a.order, a.dim, np.asarray(a.gen)[sums])


def dense_eval(d, x):
    """Naive form evaluation over all dim^order index tuples (ground truth)."""
    x = _as_finite_vector(x, "x")
    if x.shape[0] != d.dim:
        raise ValueError(f"x has length {x.shape[0]}, expected dim = {d.dim}")
    total = 0.0
    entries = d.entries
    for flat, idx in enumerate(itertools.product(range(d.dim), repeat=d.order)):
        total += entries[flat] * math.prod(x[i] for i in idx)
    return float(total)
