"""Class-imbalance measures C1 and C2."""
import numpy as np

from .dataset import ComplexityError


def _counts(d) -> np.ndarray:
    counts = np.asarray(d.class_counts if hasattr(d, "class_counts") else d, dtype=float)
    counts = counts[counts > 0]
    if counts.size < 2:
        raise ComplexityError("imbalance measures need at least 2 classes")
    return counts


def normalized_entropy(d) -> float:
    """Class-proportion entropy divided by log(n_c); 1 for balanced data."""
    counts = _counts(d)
    p = counts / counts.sum()
    return float(-(p * np.log(p)).sum() / np.log(p.size))


def c1(d) -> float:
    """1 - normalized entropy: 0 when balanced, approaching 1 as one class dominates."""
    return float(min(1.0, max(0.0, 1.0 - normalized_entropy(d))))


def imbalance_ratio(d) -> float:
    counts = _counts(d)
    n, k = counts.sum(), counts.size
    return float((k - 1) / k * np.sum(counts / (n - counts)))


def c2(d) -> float:
    return float(max(0.0, 1.0 - 1.0 / imbalance_ratio(d)))
