"""Feature-based overlap measures: F1, F1v, F2, F3, F4.

All functions take a :class:`~datacomplexity.dataset.Dataset` or a view.
F1 handles any number of classes directly; the others are defined on two
classes and are averaged over the one-versus-one pairs when given a
multiclass dataset.
"""
from dataclasses import dataclass

import numpy as np

from .dataset import ComplexityError, as_view, ovo_apply, to_numeric

# squared deviations of exactly-equal floats stay far below this
_ZERO = 1e-20


@dataclass(frozen=True)
class OverlapInterval:
    feature: int
    maxmin: float
    minmax: float
    maxmax: float
    minmin: float


def fisher_ratios(X: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """Per-feature between/within class scatter ratio.

    A feature whose classes never vary internally but whose class means
    differ gets ``inf``; a feature that is constant overall gets 0.
    """
    mu = X.mean(axis=0)
    num = np.zeros(X.shape[1])
    den = np.zeros(X.shape[1])
    for c in np.unique(labels):
        Xc = X[labels == c]
        mc = Xc.mean(axis=0)
        num += Xc.shape[0] * (mc - mu) ** 2
        den += ((Xc - mc) ** 2).sum(axis=0)
    num = np.where(num <= _ZERO, 0.0, num)
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.where(den <= _ZERO, np.where(num > 0, np.inf, 0.0), num / den)
    return r


def f1(d) -> float:
    v = as_view(d)
    if np.unique(v.labels).size < 2:
        raise ComplexityError("F1 needs at least 2 classes")
    r = fisher_ratios(to_numeric(v), v.labels)
    return float(1.0 / (1.0 + r.max()))


def _pair_split(view):
    X = to_numeric(view)
    y = view.binary_labels()
    return X[y < 0], X[y > 0]


def pinv_sym(W: np.ndarray, rcond: float = 1e-10) -> np.ndarray:
    """Pseudo-inverse of a symmetric PSD matrix, cutting eigenvalues below
    ``rcond * max eigenvalue``."""
    vals, vecs = np.linalg.eigh(W)
    top = vals.max() if vals.size else 0.0
    if top <= 0:
        return np.zeros_like(W)
    keep = vals > rcond * top
    return (vecs[:, keep] / vals[keep]) @ vecs[:, keep].T


def scatter_pair(view):
    """Between-class matrix B, within-class matrix W and direction d for a pair."""
    A, B_ = _pair_split(view)
    if A.shape[0] < 2 or B_.shape[0] < 2:
        raise ComplexityError("F1v needs at least 2 examples in each class")
    n = A.shape[0] + B_.shape[0]
    delta = A.mean(axis=0) - B_.mean(axis=0)
    W = (A.shape[0] / n) * np.cov(A, rowvar=False, bias=True).reshape(A.shape[1], -1) \
        + (B_.shape[0] / n) * np.cov(B_, rowvar=False, bias=True).reshape(A.shape[1], -1)
    B = np.outer(delta, delta)
    direction = pinv_sym(W) @ delta
    return B, W, direction


def f1v_pair(view) -> float:
    B, W, d = scatter_pair(view)
    num = d @ B @ d
    den = d @ W @ d
    dF = 0.0 if den <= _ZERO else num / den
    return float(1.0 / (1.0 + dF))


def f1v(d) -> float:
    return ovo_apply(d, f1v_pair)[0]


def overlap_intervals(A: np.ndarray, B: np.ndarray) -> list:
    lo_a, hi_a = A.min(axis=0), A.max(axis=0)
    lo_b, hi_b = B.min(axis=0), B.max(axis=0)
    return [
        OverlapInterval(f, max(lo_a[f], lo_b[f]), min(hi_a[f], hi_b[f]),
                        max(hi_a[f], hi_b[f]), min(lo_a[f], lo_b[f]))
        for f in range(A.shape[1])
    ]


def f2_pair(view) -> float:
    A, B = _pair_split(view)
    prod = 1.0
    for iv in overlap_intervals(A, B):
        span = iv.maxmax - iv.minmin
        if span > 0:
            prod *= max(0.0, iv.minmax - iv.maxmin) / span
    return float(prod)


def f2(d) -> float:
    return ovo_apply(d, f2_pair)[0]


def _overlap_counts(X: np.ndarray, y: np.ndarray):
    """Strict-interior overlap counts per feature, plus the bounds used."""
    A, B = X[y < 0], X[y > 0]
    if A.shape[0] == 0 or B.shape[0] == 0:
        zeros = np.zeros(X.shape[1])
        return np.zeros(X.shape[1], dtype=int), zeros, zeros
    maxmin = np.maximum(A.min(axis=0), B.min(axis=0))
    minmax = np.minimum(A.max(axis=0), B.max(axis=0))
    inside = (X > maxmin) & (X < minmax)
    return inside.sum(axis=0), maxmin, minmax


def f3_pair(view) -> float:
    X = to_numeric(view)
    counts, _, _ = _overlap_counts(X, view.binary_labels())
    return float(counts.min() / X.shape[0])


def f3(d) -> float:
    return ovo_apply(d, f3_pair)[0]


def f4_pair(view) -> float:
    X = to_numeric(view)
    y = view.binary_labels()
    n = X.shape[0]
    unused = list(range(X.shape[1]))
    count = n
    while unused and X.shape[0] > 0:
        counts, maxmin, minmax = _overlap_counts(X[:, unused], y)
        k = int(np.argmin(counts))  # first minimum = lowest feature index
        count = int(counts[k])
        if count == 0:
            break
        f = unused.pop(k)
        keep = (X[:, f] > maxmin[k]) & (X[:, f] < minmax[k])
        X, y = X[keep], y[keep]
    return count / n


def f4(d) -> float:
    return ovo_apply(d, f4_pair)[0]
