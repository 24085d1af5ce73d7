"""Gower distance between examples of mixed numeric/symbolic data."""
import numpy as np

from .dataset import NUMERIC, as_view, to_numeric


def _parts(d):
    v = as_view(d)
    scaled = to_numeric(v)
    codes = np.column_stack([c.values for c in v.columns])[v.row_index]
    return v, scaled, codes


def gower(d, i: int, j: int) -> float:
    """Gower dissimilarity between rows ``i`` and ``j`` (positions within ``d``)."""
    v, scaled, codes = _parts(d)
    total = 0.0
    for f, col in enumerate(v.columns):
        if col.kind == NUMERIC:
            total += abs(scaled[i, f] - scaled[j, f])
        else:
            total += float(codes[i, f] != codes[j, f])
    return total / v.m


def distance_matrix(d) -> np.ndarray:
    """Symmetric n x n Gower matrix; ranges are taken over the rows of ``d``."""
    v, scaled, codes = _parts(d)
    n = v.n
    D = np.zeros((n, n))
    tmp = np.empty((n, n))  # one scratch buffer instead of a temporary per feature
    for f, col in enumerate(v.columns):
        if col.kind == NUMERIC:
            x = scaled[:, f]
            np.subtract.outer(x, x, out=tmp)
            np.abs(tmp, out=tmp)
        else:
            c = codes[:, f]
            np.not_equal.outer(c, c, out=tmp)
        D += tmp
    D /= v.m
    np.fill_diagonal(D, 0.0)
    D.setflags(write=False)
    return D


def gower_to(train, queries: np.ndarray, query_codes: np.ndarray | None = None) -> np.ndarray:
    """Gower distances from query points to every row of ``train``.

    ``queries`` holds scaled numeric coordinates in the training frame (same
    column order as ``to_numeric``); for symbolic columns ``query_codes``
    supplies category codes. Returns a (q, n) matrix.
    """
    v, scaled, codes = _parts(train)
    out = np.zeros((queries.shape[0], v.n))
    for f, col in enumerate(v.columns):
        if col.kind == NUMERIC:
            out += np.abs(queries[:, f][:, None] - scaled[:, f][None, :])
        else:
            out += query_codes[:, f][:, None] != codes[:, f][None, :]
    return out / v.m
