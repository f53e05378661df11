"""Real-root isolation for modest-degree polynomials (internal).

Sturm-sequence bisection with max-norm-normalised float coefficients, then
Newton polish against the original polynomial.  Coefficients are low-to-high,
matching ``numpy.polynomial.polynomial``.
"""

from __future__ import annotations

import numpy as np
from numpy.polynomial import polynomial as npoly

_TRIM_REL = 1e-13
_ZERO_VAL = 1e-300


def trim(c, rel=_TRIM_REL):
    """Drop leading (high-order) coefficients below rel * max|c|."""
    c = np.atleast_1d(np.asarray(c, dtype=float))
    m = float(np.max(np.abs(c))) if c.size else 0.0
    if m == 0.0:
        return np.zeros(1)
    keep = np.nonzero(np.abs(c) > rel * m)[0]
    if keep.size == 0:
        return np.zeros(1)
    return c[: keep[-1] + 1]


def is_zero_poly(c):
    c = np.atleast_1d(np.asarray(c, dtype=float))
    return bool(np.all(c == 0.0))


def sturm_chain(c):
    """Sturm sequence of c, each element scaled to unit max-norm."""
    c = trim(c)
    if is_zero_poly(c) or c.size == 1:
        return [c]
    chain = [c / np.max(np.abs(c))]
    d = trim(npoly.polyder(chain[0]))
    if is_zero_poly(d):
        return chain
    chain.append(d / np.max(np.abs(d)))
    while chain[-1].size > 1:
        q, r = npoly.polydiv(chain[-2], chain[-1])
        r = trim(r)
        # a remainder at rounding-noise scale means we hit the gcd; keeping it
        # would amplify noise to unit size and corrupt the variation counts
        noise = 1e-12 * max(1.0, float(np.max(np.abs(q))))
        if is_zero_poly(r) or float(np.max(np.abs(r))) <= noise:
            break
        chain.append(-r / np.max(np.abs(r)))
    return chain


def _variations(chain, x):
    count = 0
    prev = 0.0
    for c in chain:
        v = npoly.polyval(x, c)
        if abs(v) <= _ZERO_VAL:
            continue
        if prev != 0.0 and (v > 0.0) != (prev > 0.0):
            count += 1
        prev = v
    return count


def count_roots(chain, a, b):
    """Distinct real roots in (a, b] by sign-variation difference."""
    return _variations(chain, a) - _variations(chain, b)


def _newton(c, dc, t, lo, hi, tol_resid):
    for _ in range(60):
        f = npoly.polyval(t, c)
        if abs(f) <= tol_resid:
            break
        df = npoly.polyval(t, dc)
        if df == 0.0:
            break
        step = f / df
        t_new = t - step
        if not (lo <= t_new <= hi):
            break
        if t_new == t:
            break
        t = t_new
    return t


def roots_in_interval(c, lo, hi, resid_rel=1e-13):
    """Distinct real roots of c inside the open interval (lo, hi).

    Isolating intervals come from Sturm-count bisection (robust to even
    multiplicities); each is narrowed, then Newton-polished against c.
    """
    c = trim(c)
    if is_zero_poly(c) or c.size == 1:
        return []
    chain = sturm_chain(c)
    dc = npoly.polyder(c)
    scale = max(1.0, float(np.max(np.abs(c))))
    tol_resid = resid_rel * scale

    # nudge endpoints off any chain zeros so variation counts are clean
    span = hi - lo
    a, b = lo + 1e-14 * span, hi - 1e-14 * span
    total = count_roots(chain, a, b)
    if total <= 0:
        return []

    roots = []
    stack = [(a, b, total)]
    while stack:
        x0, x1, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1 and x1 - x0 <= 1e-10 * max(1.0, abs(x0), abs(x1)):
            t = _newton(c, dc, 0.5 * (x0 + x1), x0, x1, tol_resid)
            roots.append(t)
            continue
        if x1 - x0 <= 4e-16 * max(1.0, abs(x0), abs(x1)):
            roots.append(0.5 * (x0 + x1))
            continue
        mid = 0.5 * (x0 + x1)
        left = count_roots(chain, x0, mid)
        stack.append((x0, mid, left))
        stack.append((mid, x1, cnt - left))

    roots.sort()
    # merge near-duplicates arising from split brackets
    out = []
    for t in roots:
        if out and abs(t - out[-1]) <= 1e-9 * max(1.0, abs(t)):
            continue
        out.append(float(t))
    return [t for t in out if lo < t < hi]


def real_roots(c, resid_rel=1e-13):
    """All distinct real roots, isolated inside a Cauchy bound."""
    c = trim(c)
    if is_zero_poly(c) or c.size == 1:
        return []
    lead = abs(c[-1])
    bound = 1.0 + float(np.max(np.abs(c[:-1]))) / lead if c.size > 1 else 1.0
    return roots_in_interval(c, -bound - 1e-6, bound + 1e-6, resid_rel)
