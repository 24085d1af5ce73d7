"""Soft-margin linear classifier and the linearity measures L1, L2, L3."""
import warnings
from dataclasses import dataclass

import numpy as np

from .dataset import ComplexityError, as_view, ovo_apply, to_numeric


@dataclass(frozen=True)
class LinearModel:
    weights: np.ndarray
    bias: float
    slacks: np.ndarray
    alphas: np.ndarray
    regularization: float
    converged: bool
    iterations: int = 0

    def decision(self, X: np.ndarray) -> np.ndarray:
        return X @ self.weights + self.bias


@dataclass(frozen=True)
class InterpolatedSample:
    point: np.ndarray
    label: int
    parents: tuple
    coefficient: float


def _kkt_gap(alpha, G, y, C):
    """Largest KKT violation m(a) - M(a) of the dual, and the extreme indices."""
    score = -y * G
    up = ((alpha < C) & (y > 0)) | ((alpha > 0) & (y < 0))
    low = ((alpha < C) & (y < 0)) | ((alpha > 0) & (y > 0))
    if not up.any() or not low.any():
        return 0.0, -1, score, up, low
    i = int(np.flatnonzero(up)[np.argmax(score[up])])
    return float(score[i] - score[low].min()), i, score, up, low


def _bias(X, y, alpha, w, C, tol=1e-12):
    """Average y_i - w.x_i over free support vectors, else midpoint of the
    feasible interval."""
    target = y - X @ w
    free = (alpha > tol) & (alpha < C - tol)
    if free.any():
        return float(target[free].mean())
    at_c = alpha >= C - tol
    lower = ((y > 0) & ~at_c) | ((y < 0) & at_c)
    upper = ~lower
    lo = target[lower].max() if lower.any() else -np.inf
    hi = target[upper].min() if upper.any() else np.inf
    if np.isinf(lo):
        return float(hi)
    if np.isinf(hi):
        return float(lo)
    return float((lo + hi) / 2)


def _solve_partition(X, y, free, at_c, C):
    """Multipliers of the free set and the bias from the equality system
    y_i f(x_i) = 1 (i free), sum(alpha * y) = 0."""
    Xf, yf = X[free], y[free]
    w_c = C * (y[at_c] @ X[at_c]) if at_c.any() else np.zeros(X.shape[1])
    k = Xf.shape[0]
    M = np.zeros((k + 1, k + 1))
    M[:k, :k] = (yf[:, None] * (Xf @ Xf.T)) * yf[None, :]
    M[:k, k] = yf
    M[k, :k] = yf
    rhs = np.empty(k + 1)
    rhs[:k] = 1.0 - yf * (Xf @ w_c)
    rhs[k] = -C * y[at_c].sum()
    sol = np.linalg.lstsq(M, rhs, rcond=None)[0]
    return sol[:k], sol[k]


def _polish(X, y, alpha, C, tol=1e-9, max_rounds=200):
    """Primal-dual active-set refinement of the support-vector partition.

    Each round solves the equality system of the current zero/free/bound
    split and moves the single worst violator to the set it belongs in.
    Returns refined multipliers, or None if no consistent split is found.
    """
    state = np.where(alpha <= tol, 0, np.where(alpha >= C - tol, 2, 1))
    for _ in range(max_rounds):
        free = np.flatnonzero(state == 1)
        if free.size == 0:
            return None
        at_c = state == 2
        af, b = _solve_partition(X, y, free, at_c, C)
        out = np.where(at_c, C, 0.0)
        out[free] = af
        margin = y * (X @ ((out * y) @ X) + b)
        viol = np.zeros(len(y))
        # rank-deficient free sets leave a least-squares residual in the margins
        viol[free] = np.maximum(np.maximum(-af, af - C), np.abs(margin[free] - 1.0))
        zero, bound = state == 0, state == 2
        viol[zero] = np.maximum(viol[zero], 1.0 - margin[zero])
        viol[bound] = np.maximum(viol[bound], margin[bound] - 1.0)
        worst = int(np.argmax(viol))
        if viol[worst] <= 1e-10:
            return np.clip(out, 0.0, C)
        if state[worst] == 1:
            if out[worst] < 0 or out[worst] > C:
                state[worst] = 0 if out[worst] < 0 else 2
            else:
                state[worst] = 0 if margin[worst] > 1.0 else 2
        else:
            state[worst] = 1
    return None


def train_linear(d, C: float = 1.0, tol: float = 1e-3, max_epochs: int = 10_000) -> LinearModel:
    """Fit ``min 1/2|w|^2 + C sum(slack)`` on a two-class view.

    The dual is solved by pairwise coordinate ascent (second-order working
    set selection) until the maximal KKT violation drops below ``tol``; the
    support-vector partition is then refined with exact linear solves until
    the KKT conditions hold to rounding level.
    """
    view = as_view(d)
    X = to_numeric(view)
    y = view.binary_labels()
    return _fit(X, y, C, tol, max_epochs)


REFINE_TOL = 1e-9


def _smo(X, y, C, alpha, w, tol, budget):
    """Pairwise coordinate ascent from ``alpha`` until the KKT gap is below
    ``tol`` or ``budget`` updates are spent. Works in place; returns
    (converged, iterations)."""
    n = len(y)
    sqn = np.einsum("ij,ij->i", X, X)
    G = y * (X @ w) - 1.0
    it = 0
    while it < budget:
        gap, i, score, up, low = _kkt_gap(alpha, G, y, C)
        if gap < tol:
            return True, it
        Ki = X @ X[i]
        b = score[i] - score
        cand = low & (b > 0)
        a = sqn[i] + sqn - 2 * Ki
        a = np.where(a > 0, a, 1e-12)
        obj = np.full(n, np.inf)
        obj[cand] = -(b[cand] ** 2) / a[cand]
        j = int(np.argmin(obj))
        step = b[j] / a[j]
        step = min(step, C - alpha[i] if y[i] > 0 else alpha[i])
        step = min(step, alpha[j] if y[j] > 0 else C - alpha[j])
        alpha[i] += y[i] * step
        alpha[j] -= y[j] * step
        alpha[i] = min(max(alpha[i], 0.0), C)
        alpha[j] = min(max(alpha[j], 0.0), C)
        w += step * (X[i] - X[j])
        G = y * (X @ w) - 1.0
        it += 1
    return _kkt_gap(alpha, G, y, C)[0] < tol, it


def _gap(X, y, alpha, C):
    return _kkt_gap(alpha, y * (X @ ((alpha * y) @ X)) - 1.0, y, C)[0]


def _fit(X, y, C=1.0, tol=1e-3, max_epochs=10_000) -> LinearModel:
    if not ((y > 0).any() and (y < 0).any()):
        raise ComplexityError("linear classifier needs both classes present")
    n, m = X.shape
    alpha = np.zeros(n)
    w = np.zeros(m)
    budget = max_epochs * n
    converged, used = _smo(X, y, C, alpha, w, tol, budget)
    # past the required tolerance, alternate exact partition solves with
    # further ascent until the KKT conditions hold to rounding level
    for _ in range(5 if converged else 0):
        refined = _polish(X, y, alpha, C)
        if refined is not None and _gap(X, y, refined, C) <= _gap(X, y, alpha, C):
            alpha = refined
            w = (alpha * y) @ X
        if _gap(X, y, alpha, C) < REFINE_TOL or used >= budget:
            break
        _, more = _smo(X, y, C, alpha, w, REFINE_TOL, min(budget - used, 5 * n))
        used += more
    if not converged:
        warnings.warn(f"linear classifier did not converge in {used} iterations", RuntimeWarning)
    # multipliers within rounding of a bound sit on it
    alpha[alpha < 1e-12 * C] = 0.0
    alpha[alpha > C * (1 - 1e-12)] = C
    w = (alpha * y) @ X
    bias = _bias(X, y, alpha, w, C)
    slacks = np.maximum(0.0, 1.0 - y * (X @ w + bias))
    return LinearModel(w, bias, slacks, alpha, C, converged, used)


def _model_for(view, C, model):
    return model if model is not None else train_linear(view, C)


def l1_pair(view, C=1.0, model=None) -> float:
    model = _model_for(view, C, model)
    s = float(model.slacks.mean())
    return s / (1.0 + s)


def l2_pair(view, C=1.0, model=None) -> float:
    model = _model_for(view, C, model)
    y = view.binary_labels()
    margin = y * model.decision(to_numeric(view))
    return float(np.mean(margin <= 0))


def l1(d, C: float = 1.0) -> float:
    return ovo_apply(d, lambda v: l1_pair(v, C))[0]


def l2(d, C: float = 1.0) -> float:
    return ovo_apply(d, lambda v: l2_pair(v, C))[0]


def interpolate(d, count: int | None = None, seed=0) -> list:
    """Random same-class convex combinations of examples in scaled space.

    ``count`` defaults to n; each class receives a share proportional to
    its size. Symbolic features copy the value of a parent picked by a fair
    coin, so for them the point stores that parent's scaled code.
    """
    view = as_view(d)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    X = to_numeric(view)
    points, labels, parents, coefs, _ = _interpolate_arrays(X, view.labels, view.symbolic_mask, count, rng)
    return [InterpolatedSample(p, int(c), (int(a), int(b)), float(t))
            for p, c, (a, b), t in zip(points, labels, parents, coefs)]


def class_quotas(labels: np.ndarray, count: int) -> dict:
    classes, sizes = np.unique(labels, return_counts=True)
    raw = sizes * count / labels.size
    quota = np.floor(raw).astype(int)
    # largest remainders, ties to the lower class index
    short = count - quota.sum()
    order = np.argsort(-(raw - quota), kind="stable")
    quota[order[:short]] += 1
    return dict(zip(classes.tolist(), quota.tolist()))


def _interpolate_arrays(X, labels, symbolic_mask, count, rng):
    """Returns points, labels, parent pairs, coefficients and, per symbolic
    cell, whether the first parent's value was copied."""
    n, m = X.shape
    count = n if count is None else int(count)
    pts, labs, pars, coefs, coins = [], [], [], [], []
    for c, q in class_quotas(labels, count).items():
        if q == 0:
            continue
        members = np.flatnonzero(labels == c)
        a = members[rng.integers(0, members.size, q)]
        b = members[rng.integers(0, members.size, q)]
        t = rng.random(q)
        p = t[:, None] * X[a] + (1 - t[:, None]) * X[b]
        coin = np.ones((q, m), bool)
        if symbolic_mask.any():
            coin = rng.random((q, m)) < 0.5
            p[:, symbolic_mask] = np.where(coin, X[a], X[b])[:, symbolic_mask]
        pts.append(p)
        labs.append(np.full(q, c))
        pars.append(np.column_stack([a, b]))
        coefs.append(t)
        coins.append(coin)
    if not pts:
        return (np.zeros((0, m)), np.zeros(0, int), np.zeros((0, 2), int),
                np.zeros(0), np.zeros((0, m), bool))
    return (np.vstack(pts), np.concatenate(labs), np.vstack(pars),
            np.concatenate(coefs), np.vstack(coins))


def l3_pair(view, seed=0, C=1.0, model=None) -> float:
    model = _model_for(view, C, model)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    X = to_numeric(view)
    pts, labs, _, _, _ = _interpolate_arrays(X, view.labels, np.zeros(X.shape[1], bool), None, rng)
    y = np.where(labs == view.class_pair[0], -1.0, 1.0)
    return float(np.mean(y * model.decision(pts) <= 0))


def pair_rng(seed, pair) -> np.random.Generator:
    """Generator owned by one class pair; independent of evaluation order."""
    return np.random.default_rng([int(seed), int(pair[0]), int(pair[1])])


def l3(d, seed: int = 0, C: float = 1.0) -> float:
    return ovo_apply(d, lambda v: l3_pair(v, pair_rng(seed, v.class_pair), C))[0]

