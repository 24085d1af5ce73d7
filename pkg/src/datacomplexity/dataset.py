"""Tabular classification data: ingestion, typing, encoding and class-pair views."""
from __future__ import annotations

import csv
import io
import logging
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

logger = logging.getLogger(__name__)

NUMERIC = "numeric"
SYMBOLIC = "symbolic"

MISSING_TOKENS = frozenset({"", "NA", "?"})


class ComplexityError(ValueError):
    """A measure or its input is undefined for the given data."""


class IngestionError(ComplexityError):
    pass


def _frozen(a, dtype=None):
    a = np.array(a, dtype=dtype, copy=True)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class FeatureColumn:
    name: str
    kind: str
    values: np.ndarray
    categories: tuple = ()

    def __post_init__(self):
        if self.kind == NUMERIC:
            vals = _frozen(self.values, float)
            if not np.all(np.isfinite(vals)):
                raise ComplexityError(f"column {self.name!r} has non-finite values")
        elif self.kind == SYMBOLIC:
            vals = _frozen(self.values, np.intp)
            if vals.size and (vals.min() < 0 or vals.max() >= len(self.categories)):
                raise ComplexityError(f"column {self.name!r} has codes outside its categories")
        else:
            raise ComplexityError(f"unknown feature kind {self.kind!r}")
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "categories", tuple(self.categories))

    @property
    def observed_range(self):
        if self.kind != NUMERIC or self.values.size == 0:
            return None
        return float(self.values.min()), float(self.values.max())

    @classmethod
    def symbolic(cls, name, raw: Sequence) -> "FeatureColumn":
        """Encode raw tokens with categories in order of first appearance."""
        cats: dict = {}
        codes = [cats.setdefault(v, len(cats)) for v in raw]
        return cls(name, SYMBOLIC, codes, tuple(cats))


@dataclass(frozen=True)
class Dataset:
    columns: tuple
    labels: np.ndarray
    class_names: tuple
    name: str = "dataset"
    warnings: tuple = ()

    def __post_init__(self):
        cols = tuple(self.columns)
        labels = _frozen(self.labels, np.intp)
        n = labels.shape[0]
        if n < 2:
            raise ComplexityError("a dataset needs at least 2 examples")
        if not cols:
            raise ComplexityError("a dataset needs at least 1 feature")
        for c in cols:
            if c.values.shape[0] != n:
                raise ComplexityError(f"column {c.name!r} has {c.values.shape[0]} values, expected {n}")
        n_c = len(self.class_names)
        if n_c < 1 or labels.min() < 0 or labels.max() >= n_c:
            raise ComplexityError("labels must index into class_names")
        if np.any(np.bincount(labels, minlength=n_c) == 0):
            raise ComplexityError("every class must have at least one example")
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "class_names", tuple(str(c) for c in self.class_names))
        object.__setattr__(self, "warnings", tuple(self.warnings))

    @property
    def n(self) -> int:
        return int(self.labels.shape[0])

    @property
    def m(self) -> int:
        return len(self.columns)

    @property
    def n_classes(self) -> int:
        return len(self.class_names)

    @property
    def class_counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.n_classes)

    @property
    def feature_names(self) -> list:
        return [c.name for c in self.columns]

    @property
    def symbolic_mask(self) -> np.ndarray:
        return np.array([c.kind == SYMBOLIC for c in self.columns])

    @property
    def row_index(self) -> np.ndarray:
        return np.arange(self.n)

    @property
    def base(self) -> "Dataset":
        return self

    class_pair = None

    @classmethod
    def from_arrays(cls, X, y, feature_names=None, symbolic=(), name="dataset") -> "Dataset":
        """Build a dataset from a 2-D array and a label vector.

        Columns listed in ``symbolic`` (indices) are treated as categorical
        tokens; everything else must be numeric.
        """
        X = np.asarray(X, dtype=object if symbolic else float)
        if X.ndim == 1:
            X = X[:, None]
        names = list(feature_names) if feature_names is not None else [f"x{j}" for j in range(X.shape[1])]
        symbolic = set(symbolic)
        cols = []
        for j, nm in enumerate(names):
            if j in symbolic:
                cols.append(FeatureColumn.symbolic(nm, [str(v) for v in X[:, j]]))
            else:
                cols.append(FeatureColumn(nm, NUMERIC, X[:, j].astype(float)))
        labels, class_names = encode_labels(y)
        return cls(tuple(cols), labels, class_names, name=name)


def encode_labels(y) -> tuple:
    """Map arbitrary labels to indices into their sorted distinct values."""
    y = np.asarray(y)
    if y.dtype.kind in "iub":
        names, codes = np.unique(y, return_inverse=True)
    else:
        names, codes = np.unique(y.astype(str), return_inverse=True)
    return codes.astype(np.intp), tuple(str(v) for v in names)


@dataclass(frozen=True)
class DatasetView:
    base: Dataset
    row_index: np.ndarray
    class_pair: tuple | None = None

    def __post_init__(self):
        rows = _frozen(self.row_index, np.intp)
        if np.unique(rows).size != rows.size:
            raise ComplexityError("view rows must be distinct")
        if self.class_pair is not None:
            if not np.all(np.isin(self.base.labels[rows], self.class_pair)):
                raise ComplexityError("view contains rows outside its class pair")
        object.__setattr__(self, "row_index", rows)

    @property
    def labels(self) -> np.ndarray:
        return self.base.labels[self.row_index]

    @property
    def n(self) -> int:
        return int(self.row_index.shape[0])

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def columns(self) -> tuple:
        return self.base.columns

    @property
    def symbolic_mask(self) -> np.ndarray:
        return self.base.symbolic_mask

    def binary_labels(self) -> np.ndarray:
        """Labels as -1 (first class of the pair) / +1 (second class)."""
        if self.class_pair is None:
            raise ComplexityError("view has no class pair")
        return np.where(self.labels == self.class_pair[0], -1.0, 1.0)


@dataclass
class IngestionOptions:
    impute: bool = False
    delimiter: str | None = None
    name: str | None = None


def _parse_float(tok: str):
    try:
        v = float(tok)
    except ValueError:
        return None
    return v if np.isfinite(v) else None


def _sniff_delimiter(header: str) -> str:
    return "\t" if header.count("\t") > header.count(",") else ","


def load_dataset(source, label_column=-1, options: IngestionOptions | None = None) -> Dataset:
    """Read a header-bearing comma- or tab-delimited file into a :class:`Dataset`.

    ``source`` may be a path, a text/binary file object or raw bytes.
    ``label_column`` is a header name or a zero-based index (negative
    indices count from the end).
    """
    opts = options or IngestionOptions()
    name = opts.name
    if isinstance(source, (bytes, bytearray)):
        text = bytes(source).decode("utf-8-sig")
    elif isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            text = fh.read().decode("utf-8-sig")
        name = name or os.path.splitext(os.path.basename(os.fspath(source)))[0]
    else:
        data = source.read()
        text = data.decode("utf-8-sig") if isinstance(data, bytes) else data

    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines or not lines[0].strip():
        raise IngestionError("empty file")
    delim = opts.delimiter or _sniff_delimiter(lines[0])
    rows = list(csv.reader(io.StringIO("\n".join(lines)), delimiter=delim))
    header = [h.strip() for h in rows[0]]
    body = rows[1:]
    if not body:
        raise IngestionError("file has a header but no data rows")
    width = len(header)
    for r, row in enumerate(body, start=2):
        if len(row) != width:
            raise IngestionError(f"line {r}: expected {width} cells, found {len(row)}")

    label_idx = _resolve_label(header, label_column)
    cells = [[c.strip() for c in row] for row in body]

    raw_labels = [row[label_idx] for row in cells]
    for r, tok in enumerate(raw_labels, start=2):
        if tok in MISSING_TOKENS:
            raise IngestionError(f"line {r}: missing class label in column {header[label_idx]!r}")

    columns = []
    for j, col_name in enumerate(header):
        if j == label_idx:
            continue
        raw = [row[j] for row in cells]
        columns.append(_build_column(col_name, raw, opts.impute))
    if not columns:
        raise IngestionError("no feature columns besides the label")

    labels, class_names = encode_labels(np.array(raw_labels, dtype=str))
    warns = []
    if len(class_names) == 1:
        warns.append("single-class dataset: class-pair measures are undefined")
        logger.warning("%s: only one class present", name or "dataset")
    return Dataset(tuple(columns), labels, class_names, name=name or "dataset", warnings=tuple(warns))


def _resolve_label(header, label_column) -> int:
    if isinstance(label_column, (int, np.integer)):
        idx = int(label_column)
        if not -len(header) <= idx < len(header):
            raise IngestionError(f"label column index {idx} out of range")
        return idx % len(header)
    if label_column in header:
        return header.index(label_column)
    if isinstance(label_column, str) and label_column.lstrip("-").isdigit():
        return _resolve_label(header, int(label_column))
    raise IngestionError(f"label column {label_column!r} not found in header")


def _build_column(col_name, raw, impute) -> FeatureColumn:
    missing = [i for i, tok in enumerate(raw) if tok in MISSING_TOKENS]
    if missing and not impute:
        raise IngestionError(f"line {missing[0] + 2}, column {col_name!r}: missing value")
    present = [tok for tok in raw if tok not in MISSING_TOKENS]
    if not present:
        raise IngestionError(f"column {col_name!r} has no values")
    parsed = [_parse_float(tok) for tok in present]
    if all(v is not None for v in parsed):
        vals = np.array([np.nan if tok in MISSING_TOKENS else float(tok) for tok in raw])
        if missing:
            vals[missing] = np.median(np.array(parsed))
        return FeatureColumn(col_name, NUMERIC, vals)
    if missing:
        # mode; ties go to the first-seen category
        counts: dict = {}
        for tok in present:
            counts[tok] = counts.get(tok, 0) + 1
        fill = max(counts, key=counts.get)
        raw = [fill if tok in MISSING_TOKENS else tok for tok in raw]
    return FeatureColumn.symbolic(col_name, raw)


def dumps_dataset(d: Dataset, label_name: str = "class", delimiter: str = ",") -> str:
    """Serialize to delimited text with the label as the last column."""
    buf = io.StringIO()
    w = csv.writer(buf, delimiter=delimiter, lineterminator="\n")
    w.writerow(d.feature_names + [label_name])
    cols = []
    for c in d.columns:
        if c.kind == NUMERIC:
            cols.append([repr(float(v)) for v in c.values])
        else:
            cols.append([c.categories[k] for k in c.values])
    names = [d.class_names[k] for k in d.labels]
    for i in range(d.n):
        w.writerow([col[i] for col in cols] + [names[i]])
    return buf.getvalue()


def save_dataset(d: Dataset, path, label_name: str = "class") -> None:
    with open(path, "w", newline="") as fh:
        fh.write(dumps_dataset(d, label_name))


def _columns_matrix(d) -> np.ndarray:
    return np.column_stack([c.values for c in d.columns]).astype(float)


def to_numeric(d) -> np.ndarray:
    """Min-max scale every column to [0, 1] over the rows of ``d``.

    Symbolic columns enter through their ordinal codes. Constant columns
    become all zeros.
    """
    X = _columns_matrix(d.base)[d.row_index]
    lo = X.min(axis=0)
    span = X.max(axis=0) - lo
    out = np.zeros_like(X)
    ok = span > 0
    out[:, ok] = (X[:, ok] - lo[ok]) / span[ok]
    return np.clip(out, 0.0, 1.0)


def ovo_views(d: Dataset) -> list:
    """One view per unordered class pair, in lexicographic pair order."""
    if d.n_classes < 2:
        raise ComplexityError("one-versus-one decomposition needs at least 2 classes")
    labels = d.labels
    return [
        DatasetView(d, np.flatnonzero((labels == a) | (labels == b)), (a, b))
        for a, b in combinations(range(d.n_classes), 2)
    ]


def ovo_aggregate(values: Iterable[float]) -> float:
    vals = list(values)
    if not vals:
        raise ComplexityError("cannot aggregate an empty sequence of subproblem values")
    return float(np.mean(vals))


def as_view(d) -> DatasetView:
    if isinstance(d, DatasetView):
        return d
    return DatasetView(d, np.arange(d.n), (0, 1) if d.n_classes == 2 else None)


def ovo_apply(d, binary_fn):
    """Evaluate ``binary_fn(view)`` on ``d`` directly if it is a class-pair
    view, else on every OVO pair. Returns ``(mean, {pair: value})``."""
    if isinstance(d, DatasetView) and d.class_pair is not None:
        return binary_fn(d), {}
    base = d.base
    if isinstance(d, DatasetView) and d.n != base.n:
        raise ComplexityError("pairwise measures need a class-pair view or a full dataset")
    per_pair = {}
    for view in ovo_views(base):
        a, b = view.class_pair
        per_pair[(base.class_names[a], base.class_names[b])] = binary_fn(view)
    return ovo_aggregate(per_pair.values()), per_pair
