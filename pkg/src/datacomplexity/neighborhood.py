"""Neighborhood measures over a Gower distance matrix: N1, N2, N3, N4, T1, LSC.

Every function accepts an optional precomputed distance matrix ``D`` so a
report can share one matrix across measures.
"""
from dataclasses import dataclass

import numpy as np

from .dataset import ComplexityError, as_view, to_numeric
from .distance import distance_matrix, gower_to
from .linearity import _interpolate_arrays

# Gower distances live in [0, 1]; absorb float noise in containment tests
_TOUCH = 1e-12


@dataclass(frozen=True)
class MinimumSpanningTree:
    edges: np.ndarray  # (n-1, 2) vertex pairs
    weights: np.ndarray

    @property
    def total_weight(self) -> float:
        return float(self.weights.sum())


@dataclass(frozen=True)
class HypersphereCover:
    radius: np.ndarray
    absorbed: np.ndarray


def _setup(d, D):
    v = as_view(d)
    if D is None:
        D = distance_matrix(v)
    return v, np.asarray(D), v.labels


def _masked(D, mask):
    return np.where(mask, D, np.inf)


def nearest_enemies(D: np.ndarray, labels: np.ndarray):
    """Index and distance of every example's nearest enemy (lowest index on ties)."""
    enemy = labels[:, None] != labels[None, :]
    if not enemy.any(axis=1).all():
        raise ComplexityError("nearest enemy undefined: single-class data")
    M = _masked(D, enemy)
    idx = M.argmin(axis=1)
    return idx, M[np.arange(len(labels)), idx]


def nearest_enemy(D: np.ndarray, labels: np.ndarray, i: int):
    row = np.where(labels != labels[i], D[i], np.inf)
    if not np.isfinite(row).any():
        raise ComplexityError("nearest enemy undefined: single-class data")
    j = int(np.argmin(row))
    return j, float(row[j])


def prim_mst(D: np.ndarray) -> MinimumSpanningTree:
    """Prim's algorithm from vertex 0.

    The next vertex is the lowest-index one with minimal key; a vertex's
    tree parent only changes on a strict improvement, so equal-weight
    frontier edges keep the earliest-attached tree vertex.
    """
    n = D.shape[0]
    in_tree = np.zeros(n, bool)
    key = np.full(n, np.inf)
    parent = np.full(n, -1)
    key[0] = 0.0
    edges, weights = [], []
    for _ in range(n):
        cand = np.where(in_tree, np.inf, key)
        u = int(np.argmin(cand))
        in_tree[u] = True
        if parent[u] >= 0:
            edges.append((int(parent[u]), u))
            weights.append(D[parent[u], u])
        better = ~in_tree & (D[u] < key)
        key[better] = D[u][better]
        parent[better] = u
    return MinimumSpanningTree(np.array(edges, dtype=int).reshape(-1, 2), np.array(weights, float))


def n1(d, D=None) -> float:
    v, D, y = _setup(d, D)
    if np.unique(y).size < 2:
        return 0.0
    mst = prim_mst(D)
    e = mst.edges
    cross = e[y[e[:, 0]] != y[e[:, 1]]]
    return float(np.unique(cross).size / v.n)


def n2(d, D=None) -> float:
    v, D, y = _setup(d, D)
    _, extra = nearest_enemies(D, y)
    same = (y[:, None] == y[None, :]) & ~np.eye(v.n, dtype=bool)
    M = _masked(D, same)
    intra = np.where(same.any(axis=1), M.min(axis=1), 0.0)
    s_intra, s_extra = intra.sum(), extra.sum()
    if s_extra <= 0:
        return 1.0
    ratio = s_intra / s_extra
    return float(ratio / (1.0 + ratio))


def nearest_neighbors(D: np.ndarray) -> np.ndarray:
    M = D.copy()
    np.fill_diagonal(M, np.inf)
    return M.argmin(axis=1)


def n3(d, D=None) -> float:
    v, D, y = _setup(d, D)
    nn = nearest_neighbors(D)
    return float(np.mean(y[nn] != y))


def n4(d, seed=0) -> float:
    """1NN error of the original data on n same-class interpolants."""
    v = as_view(d)
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    X = to_numeric(v)
    sym = v.symbolic_mask
    pts, labs, parents, _, take_a = _interpolate_arrays(X, v.labels, sym, None, rng)
    codes = np.column_stack([c.values for c in v.columns])[v.row_index]
    qcodes = np.where(take_a, codes[parents[:, 0]], codes[parents[:, 1]])
    dist = gower_to(v, pts, qcodes)
    nn = dist.argmin(axis=1)
    return float(np.mean(v.labels[nn] != labs))


def hypersphere_radii(D: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """Radii from the touching-spheres rule, memoised along nearest-enemy chains."""
    ne, dist = nearest_enemies(D, labels)
    n = len(labels)
    radius = np.full(n, np.nan)
    for start in range(n):
        chain = []
        i = start
        while np.isnan(radius[i]):
            j = ne[i]
            if ne[j] == i:
                radius[i] = dist[i] / 2
                break
            if i in chain:  # cannot happen with lowest-index tie breaks; guard anyway
                radius[i] = dist[i] / 2
                break
            chain.append(i)
            i = j
        for k in reversed(chain):
            radius[k] = max(0.0, dist[k] - radius[ne[k]])
    return radius


def hypersphere_cover(D: np.ndarray, labels: np.ndarray) -> HypersphereCover:
    r = hypersphere_radii(D, labels)
    n = len(r)
    inside = D + r[:, None] <= r[None, :] + _TOUCH  # sphere i within sphere j
    np.fill_diagonal(inside, False)
    identical = inside & inside.T
    # of two identical spheres only the higher index is dropped
    lower = np.tril(np.ones((n, n), bool), k=-1)
    inside &= ~identical | lower
    return HypersphereCover(r, inside.any(axis=1))


def t1(d, D=None) -> float:
    v, D, y = _setup(d, D)
    cover = hypersphere_cover(D, y)
    return float(np.sum(~cover.absorbed) / v.n)


def local_set_sizes(D: np.ndarray, labels: np.ndarray) -> np.ndarray:
    """|LS(x_i)|, counting x_i itself even when an enemy duplicates it."""
    _, ed = nearest_enemies(D, labels)
    closer = D < ed[:, None]
    np.fill_diagonal(closer, False)
    return closer.sum(axis=1) + 1


def lsc(d, D=None) -> float:
    v, D, y = _setup(d, D)
    sizes = local_set_sizes(D, y)
    return float(1.0 - sizes.sum() / v.n ** 2)
