"""Extreme eigenvalues, bounds, and copositivity falsification.

Extreme Z-eigenvalues are estimated by a shifted symmetric power iteration.
The shift adapts to the local curvature (the gradient's Jacobian is itself a
small Hankel matrix, so it costs one extra correlation per step) and any step
that would lower the Rayleigh value is rejected while the shift doubles
toward a globally sufficient cap, so every restart ascends monotonically.
Restarts combine the coordinate directions, a seed derived from the
associated plane tensor's circle extremes, and seeded random directions; this
makes the plane-derived bounds hold against the estimates by construction.
For two-dimensional tensors the full H-spectrum reduces to the real roots of
a single polynomial.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import polyroots
from .associated import PlaneTensor, _counts_all, assoc_plane
from .core import HankelTensor, _power_coeffs, eval_form, eval_gradient_form
from .plane import z_extremes

_LAMBDA_STALL_REL = 1e-12
_RESIDUAL_OK_REL = 1e-8
_WITNESS_LEVEL = -1e-12


@dataclass(frozen=True)
class EigenPair:
    kind: str
    value: float
    vector: np.ndarray
    converged: bool = True
    residual: float = 0.0


@dataclass(frozen=True)
class ZBounds:
    upper_for_min: Optional[float]
    lower_for_max: Optional[float]
    source: str


def _entry_abs_sum(gen, order, dim):
    counts = np.array(_counts_all(order, dim), dtype=float)
    return float(np.dot(counts, np.abs(gen)))


def _grad_and_jacobian(work, x, outer_idx):
    """A x^(m-1) together with the Hankel matrix M = A x^(m-2).

    M x equals the gradient form and (m-1) M is its Jacobian, so one sliding
    correlation yields the step direction and the local curvature at once.
    """
    c = _power_coeffs(x, work.order - 2)
    w = np.correlate(work.gen, c, mode="valid")
    m_mat = w[outer_idx]
    return m_mat @ x, m_mat


def _vandermonde_unit(y, dim):
    """Unit vector (1, u, ..., u^(n-1))/norm for u = y2/y1, or e_n when y1 ~ 0."""
    if abs(y[0]) <= 1e-12:
        e = np.zeros(dim)
        e[-1] = 1.0
        return e
    u = y[1] / y[0]
    vec = u ** np.arange(dim)
    return vec / np.linalg.norm(vec)


def _plane_seed(work):
    """Start vector realising the plane tensor's extreme value as a form value."""
    if work.dim == 2:
        ext = z_extremes(PlaneTensor(work.order, work.gen))
        return ext.y_max
    top = (work.dim - 1) * work.order
    if top % 2 == 1 or top > 60:
        return None
    ext = z_extremes(assoc_plane(work))
    return _vandermonde_unit(ext.y_max, work.dim)


def _newton_polish(work, x, lam, outer_idx, steps=8):
    """Newton steps on [A x^(m-1) - lam x; (|x|^2 - 1)/2] = 0.

    The power iteration's Rayleigh values converge fast but the vector can
    creep when the eigen-gap is small; a few Newton steps land on the nearby
    stationary point at quadratic rate.
    """
    n = work.dim
    eye = np.eye(n)
    for _ in range(steps):
        g, m_mat = _grad_and_jacobian(work, x, outer_idx)
        f = np.concatenate([g - lam * x, [0.5 * (float(x @ x) - 1.0)]])
        if float(np.max(np.abs(f))) <= 1e-15 * (1.0 + abs(lam)):
            break
        jac = np.zeros((n + 1, n + 1))
        jac[:n, :n] = (work.order - 1) * m_mat - lam * eye
        jac[:n, n] = -x
        jac[n, :n] = x
        try:
            delta = np.linalg.solve(jac, -f)
        except np.linalg.LinAlgError:
            break
        if not np.all(np.isfinite(delta)):
            break
        x = x + delta[:n]
        lam = lam + float(delta[n])
        nrm = float(np.linalg.norm(x))
        if nrm < 1e-300:
            break
        x = x / nrm
    g = eval_gradient_form(work, x)
    lam = float(np.dot(x, g))
    residual = float(np.max(np.abs(g - lam * x)))
    return x, lam, residual


def zeig_extreme(a, mode, restarts=20, iters=500, seed=0):
    """Estimate the extreme Z-eigenpair of ``a``.

    Shifted power iteration x <- normalize(A x^(m-1) + beta x), with beta set
    from the smallest eigenvalue of the local Jacobian A x^(m-2) and raised
    toward the always-sufficient cap (m-1) * sum_k s(k,m,n) |v_k| whenever a
    step fails to increase the Rayleigh value, so the iterate value never
    drops.  Each start finishes with a guarded Newton polish of the
    stationarity system.  ``mode='min'`` runs the method on -A.
    Deterministic starts (coordinate vectors and the plane-extreme seed) are
    always included; ``restarts`` seeded random starts are added.  The best
    stationary pair over all starts is returned, with non-convergence
    reported in-band.
    """
    if mode not in ("min", "max"):
        raise ValueError("mode must be 'min' or 'max'")
    if restarts < 1:
        raise ValueError("restarts must be at least 1")
    if iters < 1:
        raise ValueError("iters must be at least 1")

    sign = 1.0 if mode == "max" else -1.0
    work = HankelTensor(a.order, a.dim, sign * np.asarray(a.gen))
    scale = _entry_abs_sum(work.gen, work.order, work.dim)
    beta_cap = (a.order - 1) * scale + 1e-12
    beta_pad = 1e-9 * (1.0 + scale)
    idx = np.arange(a.dim)
    outer_idx = idx[:, None] + idx[None, :]
    rng = np.random.default_rng(seed)

    def local_beta(m_mat):
        low = float(np.linalg.eigvalsh(m_mat)[0])
        return (a.order - 1) * max(0.0, -low) + beta_pad

    starts = [np.eye(a.dim)[i] for i in range(a.dim)]
    plane_seed = _plane_seed(work)
    if plane_seed is not None:
        starts.append(plane_seed)
    for _ in range(restarts):
        v = rng.standard_normal(a.dim)
        starts.append(v / np.linalg.norm(v))

    best = None
    for x0 in starts:
        x = x0 / np.linalg.norm(x0)
        g, m_mat = _grad_and_jacobian(work, x, outer_idx)
        lam = float(np.dot(x, g))
        beta = local_beta(m_mat)
        stalled = False
        for _ in range(iters):
            y = g + beta * x
            nrm = float(np.linalg.norm(y))
            if nrm < 1e-300:
                break
            x_new = y / nrm
            g_new, m_new = _grad_and_jacobian(work, x_new, outer_idx)
            lam_new = float(np.dot(x_new, g_new))
            if lam_new < lam - 1e-14 * (1.0 + abs(lam)) and beta < beta_cap:
                beta = min(max(2.0 * beta, 1e-6 * (1.0 + scale)), beta_cap)
                continue
            x, g, m_mat = x_new, g_new, m_new
            if abs(lam_new - lam) <= _LAMBDA_STALL_REL * (1.0 + abs(lam_new)):
                lam = lam_new
                stalled = True
                break
            lam = lam_new
            beta = local_beta(m_mat)
        residual = float(np.max(np.abs(g - lam * x)))
        x_p, lam_p, residual_p = _newton_polish(work, x, lam, outer_idx)
        if residual_p < residual and lam_p >= lam - 1e-9 * (1.0 + abs(lam)):
            x, lam, residual = x_p, lam_p, residual_p
        converged = stalled or residual <= _RESIDUAL_OK_REL * (1.0 + abs(lam))
        cand = (converged, lam, x, residual)
        if best is None:
            best = cand
        elif (cand[0], cand[1]) > (best[0], best[1]):
            best = cand
    converged, lam, x, residual = best
    return EigenPair("Z", sign * lam, x, converged, residual)


def heig_dim2(a):
    """All H-eigenpairs of a two-dimensional Hankel tensor.

    Splits on x = (0, 1) and x = (1, t); the latter reduces to the real roots
    of g(t) = F_2(1,t) - t^(m-1) F_1(1,t) where F = A x^(m-1).  Candidates
    are normalised to unit max-norm and kept only when the eigen residual is
    within 1e-8 * (1 + |lambda|).  A vanishing g (every direction is an
    eigenvector) is reported at representative vectors.
    """
    if a.dim != 2:
        raise ValueError("heig_dim2 requires dim = 2")
    m = a.order
    v = np.asarray(a.gen)
    binom = np.array([math.comb(m - 1, k) for k in range(m)], dtype=float)
    f1 = v[:m] * binom  # F_1(1,t) coefficients in t
    f2 = v[1 : m + 1] * binom
    g = np.polynomial.polynomial.polysub(f2, np.concatenate([np.zeros(m - 1), f1]))

    candidates = [np.array([0.0, 1.0])]
    scale = max(1.0, float(np.max(np.abs(np.concatenate([f1, f2])))))
    if np.max(np.abs(g)) <= 1e-12 * scale:
        candidates.append(np.array([1.0, 0.0]))
    else:
        for t in polyroots.real_roots(g):
            candidates.append(np.array([1.0, t]))

    pairs = []
    for x in candidates:
        x = x / np.max(np.abs(x))
        imax = int(np.argmax(np.abs(x)))
        if x[imax] < 0:
            x = -x
        grad = eval_gradient_form(a, x)
        powers = x ** (m - 1)
        lam_comps = [grad[i] / powers[i] for i in range(2) if abs(powers[i]) > 0.5]
        lam = float(lam_comps[0])
        residual = float(np.max(np.abs(grad - lam * powers)))
        if residual <= 1e-8 * (1.0 + abs(lam)):
            pairs.append(EigenPair("H", lam, x, True, residual))

    pairs.sort(key=lambda p: (-p.value, tuple(p.vector)))
    deduped = []
    for p in pairs:
        dup = any(
            abs(p.value - q.value) <= 1e-9 * (1.0 + abs(q.value))
            and min(np.max(np.abs(p.vector - q.vector)), np.max(np.abs(p.vector + q.vector))) <= 1e-9
            for q in deduped
        )
        if not dup:
            deduped.append(p)
    return deduped


def bounds_prop6(a):
    """Coordinate-direction bounds: the form's values at the unit vectors."""
    vals = [float(a.gen[(i - 1) * a.order]) for i in range(1, a.dim + 1)]
    return ZBounds(min(vals), max(vals), "prop6")


def _plane_to_sphere_scale(y, order, dim):
    """Factor S with lambda(P) = S * (A u^m / ||u||^m) at the matched vector.

    S(y) = (sum_{j<n} y1^(2(n-1-j)) y2^(2j))^(m/2); expanding S^2 shows it
    equals sum_k s(k,m,n) y1^(2(L-k)) y2^(2k), the squared length of the
    weighted power vector, so the ratio lambda(P)/S is always a form value on
    the unit sphere.
    """
    j = np.arange(dim, dtype=float)
    base = float(np.sum(y[0] ** (2.0 * (dim - 1 - j)) * y[1] ** (2.0 * j)))
    return base ** (order / 2.0)


def bounds_prop7(a):
    """Bounds from the associated plane tensor's circle extremes.

    Requires (dim-1)*order even.  Bounds whose scale factor falls below
    1e-14 are reported as absent (None).
    """
    top = (a.dim - 1) * a.order
    if top % 2 == 1:
        raise ValueError("bounds_prop7 requires (dim-1)*order to be even")
    ext = z_extremes(assoc_plane(a))
    s_min = _plane_to_sphere_scale(ext.y_min, a.order, a.dim)
    s_max = _plane_to_sphere_scale(ext.y_max, a.order, a.dim)
    upper = ext.lambda_min / s_min if s_min >= 1e-14 else None
    lower = ext.lambda_max / s_max if s_max >= 1e-14 else None
    return ZBounds(upper, lower, "prop7")


def odd_sign_check(pair, cls, order):
    """Sign pattern required of Z-eigenpairs of odd-order complete/strong tensors.

    lambda > 0 demands x_i >= -1e-9 at every odd (1-based) coordinate, plus
    x_1 >= 1e-12 for class 'complete'; lambda < 0 demands the mirrored signs;
    |lambda| <= 1e-12 passes vacuously.
    """
    if cls not in ("complete", "strong"):
        raise ValueError("cls must be 'complete' or 'strong'")
    if pair.kind != "Z":
        raise ValueError("odd_sign_check applies to Z eigenpairs")
    if order % 2 == 0:
        raise ValueError("odd_sign_check applies to odd orders")
    lam = pair.value
    if abs(lam) <= 1e-12:
        return True
    sgn = 1.0 if lam > 0 else -1.0
    x = sgn * np.asarray(pair.vector)
    if np.any(x[0::2] < -1e-9):
        return False
    if cls == "complete" and x[0] < 1e-12:
        return False
    return True


def _project_simplex(x):
    """Euclidean projection onto the standard simplex."""
    u = np.sort(x)[::-1]
    css = np.cumsum(u) - 1.0
    idx = np.arange(1, x.shape[0] + 1)
    cond = u - css / idx > 0
    rho = int(np.nonzero(cond)[0][-1])
    theta = css[rho] / (rho + 1.0)
    return np.maximum(x - theta, 0.0)


def _simplex_grid(dim, steps):
    """All barycentric grid points with denominator ``steps``."""
    for cuts in itertools.combinations(range(steps + dim - 1), dim - 1):
        prev = -1
        parts = []
        for c in cuts:
            parts.append(c - prev - 1)
            prev = c
        parts.append(steps + dim - 2 - prev)
        yield np.array(parts, dtype=float) / steps


def copositive_falsify(a, depth=1):
    """Search the simplex for a point with A x^m < -1e-12.

    Scans the barycentric grid of step 1/(64*depth), then polishes the worst
    point with 20 projected-gradient steps.  Returns the witness vector or
    None; absence of a witness is not a copositivity certificate.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    steps = 64 * depth
    best_x, best_f = None, np.inf
    for x in _simplex_grid(a.dim, steps):
        f = eval_form(a, x)
        if f < best_f:
            best_x, best_f = x, f

    x, fx = best_x, best_f
    for _ in range(20):
        g = a.order * eval_gradient_form(a, x)
        eta = 1.0 / (1.0 + float(np.linalg.norm(g)))
        improved = False
        for _ in range(12):
            xn = _project_simplex(x - eta * g)
            fn = eval_form(a, xn)
            if fn < fx:
                x, fx = xn, fn
                improved = True
                break
            eta *= 0.5
        if not improved:
            break
    if fx < _WITNESS_LEVEL:
        return x
    return None
