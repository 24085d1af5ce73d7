"""Synthetic datasets with known complexity behaviour."""
import numpy as np

from .dataset import ComplexityError, Dataset, FeatureColumn, NUMERIC, encode_labels


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def make_clusters(n_per_class: int = 50, n_classes: int = 2, separation: float = 5.0,
                  spread: float = 0.5, seed=0, n_features: int = 2) -> Dataset:
    """Gaussian blobs with centres ``separation`` apart along the first axis."""
    if separation <= 0:
        raise ComplexityError("separation must be positive")
    rng = _rng(seed)
    X = rng.normal(0.0, 1.0, (n_per_class * n_classes, n_features)) * spread
    y = np.repeat(np.arange(n_classes), n_per_class)
    X[:, 0] += y * separation
    return Dataset.from_arrays(X, [f"c{k}" for k in y], name="clusters")


def make_rings(n_per_class: int = 100, radii=(1.0, 3.0), seed=0, jitter: float = 0.05) -> Dataset:
    """Concentric circles, one class per radius, evenly spaced angles plus noise."""
    radii = [float(r) for r in radii]
    if len(set(radii)) != len(radii):
        raise ComplexityError("ring radii must be distinct")
    rng = _rng(seed)
    pts, labels = [], []
    base = np.linspace(0, 2 * np.pi, n_per_class, endpoint=False)
    for k, r in enumerate(radii):
        theta = base + rng.normal(0, jitter, n_per_class)
        pts.append(np.column_stack([r * np.cos(theta), r * np.sin(theta)]))
        labels += [f"ring{k}"] * n_per_class
    return Dataset.from_arrays(np.vstack(pts), labels, name="rings")


def make_alternating_line(n: int = 10) -> Dataset:
    """Points 0..n-1 on a line with labels alternating a, b, a, ..."""
    return Dataset.from_arrays(np.arange(n, dtype=float), ["a" if i % 2 == 0 else "b" for i in range(n)],
                               name="alternating-line")


def make_random(rng, n=None, m=None, n_classes=None, symbolic_fraction=0.3) -> Dataset:
    """Random mixed-type dataset for fuzzing (every class non-empty)."""
    rng = _rng(rng)
    n = int(rng.integers(10, 501)) if n is None else n
    m = int(rng.integers(1, 21)) if m is None else m
    n_classes = int(rng.integers(2, 6)) if n_classes is None else n_classes
    y = np.concatenate([np.arange(n_classes), rng.integers(0, n_classes, n - n_classes)])
    rng.shuffle(y)
    shift = rng.normal(0, 1, (n_classes, m))
    cols = []
    for j in range(m):
        if rng.random() < symbolic_fraction:
            k = int(rng.integers(2, 6))
            codes = (rng.integers(0, k, n) + (y % 2) * (rng.random(n) < 0.3)) % k
            cols.append(FeatureColumn.symbolic(f"s{j}", [f"v{c}" for c in codes]))
        else:
            x = rng.normal(0, 1, n) + shift[y, j]
            if rng.random() < 0.1:
                x = np.round(x)
            cols.append(FeatureColumn(f"x{j}", NUMERIC, x))
    labels, names = encode_labels(np.array([f"k{c}" for c in y]))
    return Dataset(tuple(cols), labels, names, name="random")


def flip_labels(d: Dataset, fraction: float, seed=0) -> Dataset:
    """Give ``round(fraction * n)`` random examples a different random label.

    Classes left without examples are dropped.
    """
    if not 0 <= fraction <= 1:
        raise ComplexityError("fraction must lie in [0, 1]")
    rng = _rng(seed)
    y = np.array(d.labels)
    k = d.n_classes
    picks = rng.choice(d.n, size=int(round(fraction * d.n)), replace=False)
    if k > 1:
        offset = rng.integers(1, k, picks.size)
        y[picks] = (y[picks] + offset) % k
    names = np.array(d.class_names)[y]
    labels, class_names = encode_labels(names)
    return Dataset(d.columns, labels, class_names, name=d.name)
