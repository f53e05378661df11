"""Every Hankel tensor splits into rank-one Vandermonde terms.

A Hankel tensor with generating vector of length r always equals a
combination of r rank-one powers of Vandermonde vectors (1, u, .., u^(n-1)).
The decomposition is exact up to rounding, composable back, and multiplies
node-by-node under the Hadamard product.
"""

import numpy as np

from hankeltensor import (
    compose,
    decompose,
    hadamard,
    hadamard_vd,
    is_positive,
    make_hankel,
)

rng = np.random.default_rng(21)
a = make_hankel(3, 3, rng.uniform(-1, 1, 7))
print("target generating vector:", np.round(a.gen, 6).tolist())

d = decompose(a)
print(f"\ndecomposition with {len(d)} terms (Chebyshev nodes by default):")
for u, c in zip(d.nodes, d.coeffs):
    print(f"  node {u: .6f}  coefficient {c: .6f}")

back = compose(d, a.order, a.dim)
print("recomposition error:", float(np.max(np.abs(back.gen - a.gen))))

custom = decompose(a, nodes=np.linspace(-2, 2, 7))
print("\nsame tensor on equispaced nodes reuses", len(custom), "terms;")
print("nodes are a free choice as long as they are distinct.")

x = decompose(make_hankel(2, 2, [3.0, 0.0, 2.0]), nodes=[0.0, 1.0, -1.0])
y = decompose(make_hankel(2, 2, [2.0, 1.0, 1.0]), nodes=[0.0, 1.0, -1.0])
print("\npositive decompositions:", is_positive(x), is_positive(y))
z = hadamard_vd(x, y)
print("product decomposition nodes:", z.nodes.tolist())
lhs = compose(z, 2, 2).gen
rhs = hadamard(compose(x, 2, 2), compose(y, 2, 2)).gen
print("composes to the entrywise product:", np.allclose(lhs, rhs, atol=1e-12))
