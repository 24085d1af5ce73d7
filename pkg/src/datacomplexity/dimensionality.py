"""Dimensionality measures T2, T3, T4."""
import math
from dataclasses import dataclass

import numpy as np

from .dataset import ComplexityError, as_view, to_numeric

VARIANCE_TARGET = 0.95


@dataclass(frozen=True)
class PcaSummary:
    eigenvalues: np.ndarray
    m_prime: int
    n_features: int


def jacobi_eigenvalues(S: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, descending.

    Sweeps stop once the off-diagonal Frobenius norm falls below ``tol``
    times the matrix norm, or stops shrinking at the rounding floor.
    """
    A = np.array(S, dtype=float)
    k = A.shape[0]
    scale = max(np.linalg.norm(A), 1e-300)
    prev = math.inf
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, (A ** 2).sum() - (np.diag(A) ** 2).sum()))
        if off <= tol * scale or off >= prev:
            break
        prev = off
        for p in range(k - 1):
            for q in range(p + 1, k):
                apq = A[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1))
                c = 1 / math.sqrt(t * t + 1)
                s = t * c
                rp, rq = A[p].copy(), A[q].copy()
                A[p], A[q] = c * rp - s * rq, s * rp + c * rq
                cp, cq = A[:, p].copy(), A[:, q].copy()
                A[:, p], A[:, q] = c * cp - s * cq, s * cp + c * cq
    vals = np.diag(A).copy()
    return np.sort(vals)[::-1]


def pca_summary(d) -> PcaSummary:
    """Eigen-spectrum of the correlation matrix of the non-constant columns."""
    v = as_view(d)
    X = to_numeric(v)
    if v.n < 2:
        raise ComplexityError("PCA needs at least 2 examples")
    sd = X.std(axis=0)
    live = sd > 1e-12
    if not live.any():
        raise ComplexityError("all columns are constant: zero total variance")
    Z = (X[:, live] - X[:, live].mean(axis=0)) / sd[live]
    S = Z.T @ Z / v.n
    vals = jacobi_eigenvalues(S)
    vals = np.where(vals < 0, 0.0, vals)
    share = np.cumsum(vals) / vals.sum()
    m_prime = int(np.argmax(share >= VARIANCE_TARGET - 1e-12)) + 1
    return PcaSummary(vals, m_prime, v.m)


def t2(d) -> float:
    v = as_view(d)
    return v.m / v.n


def t3(d, pca: PcaSummary | None = None) -> float:
    pca = pca or pca_summary(d)
    return pca.m_prime / as_view(d).n


def t4(d, pca: PcaSummary | None = None) -> float:
    pca = pca or pca_summary(d)
    return pca.m_prime / pca.n_features
