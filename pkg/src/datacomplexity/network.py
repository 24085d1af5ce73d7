"""Epsilon-neighbourhood graph measures: Density, ClsCoef and Hubs."""
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from .dataset import ComplexityError, as_view
from .distance import distance_matrix


@dataclass(frozen=True)
class EpsilonGraph:
    n: int
    edges: np.ndarray  # (|E|, 2), i < j
    weights: np.ndarray
    epsilon: float

    def adjacency(self) -> sp.csr_matrix:
        i, j = self.edges[:, 0], self.edges[:, 1]
        data = np.ones(2 * len(i))
        A = sp.coo_matrix((data, (np.r_[i, j], np.r_[j, i])), shape=(self.n, self.n))
        return A.tocsr()

    def to_edge_list(self) -> str:
        """One ``i j weight`` line per edge."""
        return "".join(f"{i} {j} {w!r}\n" for (i, j), w in zip(self.edges.tolist(), self.weights.tolist()))

    def save_edge_list(self, path) -> None:
        with open(path, "w") as fh:
            fh.write(self.to_edge_list())


def build_graph(d, D=None, epsilon: float = 0.15) -> EpsilonGraph:
    """Connect pairs closer than ``epsilon``, then prune edges across classes."""
    if not 0 < epsilon <= 1:
        raise ComplexityError("epsilon must lie in (0, 1]")
    v = as_view(d)
    D = distance_matrix(v) if D is None else np.asarray(D)
    y = v.labels
    i, j = np.triu_indices(v.n, k=1)
    near = D[i, j] < epsilon
    keep = near & (y[i] == y[j])
    return EpsilonGraph(v.n, np.column_stack([i[keep], j[keep]]), D[i[keep], j[keep]], float(epsilon))


def density(g: EpsilonGraph) -> float:
    if g.n < 2:
        raise ComplexityError("density needs at least 2 vertices")
    return float(1.0 - 2.0 * len(g.edges) / (g.n * (g.n - 1)))


def local_clustering(g: EpsilonGraph) -> np.ndarray:
    A = g.adjacency()
    k = np.asarray(A.sum(axis=1)).ravel()
    # edges among neighbours of i = (A^3)_ii / 2
    if A.nnz > g.n * g.n / 20:
        Ad = A.toarray()
        closed = ((Ad @ Ad) * Ad).sum(axis=1) / 2
    else:
        closed = np.asarray((A @ A).multiply(A).sum(axis=1)).ravel() / 2
    out = np.zeros(g.n)
    ok = k > 1
    out[ok] = 2 * closed[ok] / (k[ok] * (k[ok] - 1))
    return out


def clustering_coefficient(g: EpsilonGraph) -> float:
    return float(1.0 - local_clustering(g).mean())


def hub_scores(g: EpsilonGraph, tol: float = 1e-10, max_iter: int = 10_000) -> np.ndarray:
    """Principal eigenvector of A^T A, scaled to a maximum of 1.

    Iterates with ``A + I``: for symmetric non-negative A this has the same
    eigenvectors as A^T A and its dominant one is the Perron vector, which
    also settles the bipartite case where A^T A has a repeated top
    eigenvalue.
    """
    if len(g.edges) == 0:
        return np.zeros(g.n)
    A = g.adjacency()
    h = np.ones(g.n)
    for _ in range(max_iter):
        nxt = A @ h + h
        nxt /= nxt.max()
        if np.abs(nxt - h).max() < tol:
            h = nxt
            break
        h = nxt
    return h


def hub_score(g: EpsilonGraph) -> float:
    return float(1.0 - hub_scores(g).mean())
