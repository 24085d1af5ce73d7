"""Run a selection of measures on one dataset and serialize the result."""
from __future__ import annotations

import csv
import io
import json
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import balance, dimensionality, feature_measures as feature, linearity, neighborhood, network
from .dataset import ComplexityError, Dataset, ovo_apply
from .distance import distance_matrix

MEASURES = (
    "F1", "F1v", "F2", "F3", "F4",
    "L1", "L2", "L3",
    "N1", "N2", "N3", "N4", "T1", "LSC",
    "Density", "ClsCoef", "Hubs",
    "T2", "T3", "T4",
    "C1", "C2",
)

GROUPS = {
    "feature": ("F1", "F1v", "F2", "F3", "F4"),
    "linearity": ("L1", "L2", "L3"),
    "neighborhood": ("N1", "N2", "N3", "N4", "T1", "LSC"),
    "network": ("Density", "ClsCoef", "Hubs"),
    "dimensionality": ("T2", "T3", "T4"),
    "balance": ("C1", "C2"),
}

ID_COLUMNS = ("dataset", "n", "m", "n_classes")


def bounds(measure: str, n: int, m: int) -> tuple:
    """Closed value interval each measure must fall in."""
    if measure == "LSC":
        return 0.0, 1.0 - 1.0 / n
    if measure in ("T2", "T3"):
        return 0.0, float(m)
    return 0.0, 1.0


@dataclass
class RunParams:
    seed: int = 0
    epsilon: float = 0.15
    C: float = 1.0
    impute: bool = False
    encoding: str = "ordinal"


@dataclass
class MeasureResult:
    value: float | None
    status: str = "ok"
    reason: str | None = None
    per_pair: dict | None = None
    alternate: dict | None = None
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_dict(self, include_timing=False) -> dict:
        out = {"status": self.status, "value": self.value}
        if self.reason:
            out["reason"] = self.reason
        if self.per_pair:
            out["per_pair"] = {"|".join(k): v for k, v in self.per_pair.items()}
        if self.alternate:
            out["alternate"] = self.alternate
        if include_timing:
            out["elapsed"] = self.elapsed
        return out


@dataclass
class ComplexityReport:
    dataset_id: str
    n: int
    m: int
    n_classes: int
    measures: dict
    run_params: RunParams
    warnings: list = field(default_factory=list)

    def values(self) -> dict:
        return {k: (r.value if r.ok else None) for k, r in self.measures.items()}

    def to_dict(self, include_timing=False) -> dict:
        return {
            "dataset": self.dataset_id,
            "n": self.n,
            "m": self.m,
            "n_classes": self.n_classes,
            "params": asdict(self.run_params),
            "warnings": list(self.warnings),
            "measures": {k: r.to_dict(include_timing) for k, r in self.measures.items()},
        }


def resolve_selection(selection) -> list:
    """Expand group names and validate ids; returns ids in catalog order."""
    if selection is None:
        return list(MEASURES)
    if isinstance(selection, str):
        selection = [s for s in selection.split(",") if s.strip()]
    lookup = {m.lower(): m for m in MEASURES}
    chosen = set()
    for item in selection:
        key = item.strip()
        if key.lower() in GROUPS:
            chosen.update(GROUPS[key.lower()])
        elif key.lower() in lookup:
            chosen.add(lookup[key.lower()])
        else:
            raise ComplexityError(f"unknown measure or group {key!r}")
    if not chosen:
        raise ComplexityError("empty measure selection")
    return [m for m in MEASURES if m in chosen]


class _Shared:
    """Intermediates computed at most once, safe under concurrent access."""

    def __init__(self, d: Dataset, params: RunParams):
        self.d = d
        self.params = params
        self._cache = {}
        self._locks = {}
        self._guard = threading.Lock()

    def get(self, key, build):
        with self._guard:
            lock = self._locks.setdefault(key, threading.Lock())
        with lock:
            if key not in self._cache:
                try:
                    self._cache[key] = (True, build())
                except Exception as exc:  # replayed to every consumer
                    self._cache[key] = (False, exc)
        ok, val = self._cache[key]
        if not ok:
            raise val
        return val

    @property
    def D(self):
        return self.get("D", lambda: distance_matrix(self.d))

    def model(self, view):
        return self.get(("svm", view.class_pair),
                        lambda: linearity.train_linear(view, self.params.C))

    @property
    def pca(self):
        return self.get("pca", lambda: dimensionality.pca_summary(self.d))

    @property
    def graph(self):
        return self.get("graph", lambda: network.build_graph(self.d, self.D, self.params.epsilon))


def _measure_fns(s: _Shared) -> dict:
    d, p = s.d, s.params

    def pairwise(fn):
        return lambda: ovo_apply(d, fn)

    def single(fn):
        return lambda: (fn(), None)

    def c1():
        return balance.c1(d), None, {"normalized_entropy": balance.normalized_entropy(d)}

    return {
        "F1": single(lambda: feature.f1(d)),
        "F1v": pairwise(feature.f1v_pair),
        "F2": pairwise(feature.f2_pair),
        "F3": pairwise(feature.f3_pair),
        "F4": pairwise(feature.f4_pair),
        "L1": pairwise(lambda v: linearity.l1_pair(v, p.C, s.model(v))),
        "L2": pairwise(lambda v: linearity.l2_pair(v, p.C, s.model(v))),
        "L3": pairwise(lambda v: linearity.l3_pair(
            v, linearity.pair_rng(p.seed, v.class_pair), p.C, s.model(v))),
        "N1": single(lambda: neighborhood.n1(d, s.D)),
        "N2": single(lambda: neighborhood.n2(d, s.D)),
        "N3": single(lambda: neighborhood.n3(d, s.D)),
        "N4": single(lambda: neighborhood.n4(d, p.seed)),
        "T1": single(lambda: neighborhood.t1(d, s.D)),
        "LSC": single(lambda: neighborhood.lsc(d, s.D)),
        "Density": single(lambda: network.density(s.graph)),
        "ClsCoef": single(lambda: network.clustering_coefficient(s.graph)),
        "Hubs": single(lambda: network.hub_score(s.graph)),
        "T2": single(lambda: dimensionality.t2(d)),
        "T3": single(lambda: dimensionality.t3(d, s.pca)),
        "T4": single(lambda: dimensionality.t4(d, s.pca)),
        "C1": c1,
        "C2": single(lambda: balance.c2(d)),
    }


def _run_one(name, fn, n, m) -> MeasureResult:
    t0 = time.perf_counter()
    try:
        out = fn()
        value, per_pair = float(out[0]), out[1]
        alternate = out[2] if len(out) > 2 else None
    except Exception as exc:
        return MeasureResult(None, "failed", f"{type(exc).__name__}: {exc}",
                             elapsed=time.perf_counter() - t0)
    elapsed = time.perf_counter() - t0
    lo, hi = bounds(name, n, m)
    if not np.isfinite(value) or not lo - 1e-12 <= value <= hi + 1e-12:
        return MeasureResult(None, "failed", f"value {value!r} outside [{lo}, {hi}]", elapsed=elapsed)
    return MeasureResult(value, per_pair=per_pair, alternate=alternate, elapsed=elapsed)


def compute_all(d: Dataset, selection=None, params: RunParams | None = None, jobs: int = 1) -> ComplexityReport:
    """Compute the selected measures (ids or group names; all by default).

    A failing measure is recorded as failed and does not stop the others.
    """
    names = resolve_selection(selection)
    params = params or RunParams()
    shared = _Shared(d, params)
    fns = _measure_fns(shared)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as ex:
            futures = {k: ex.submit(_run_one, k, fns[k], d.n, d.m) for k in names}
            results = {k: futures[k].result() for k in names}
    else:
        results = {k: _run_one(k, fns[k], d.n, d.m) for k in names}

    warns = list(d.warnings)
    if d.symbolic_mask.any():
        warns.append("symbolic features are ordinal-encoded for feature, linearity and PCA measures")
    for k, r in results.items():
        if not r.ok:
            warns.append(f"{k} failed: {r.reason}")
    return ComplexityReport(d.name, d.n, d.m, d.n_classes, results, params, warns)


def serialize(report: ComplexityReport, format: str = "json", header: bool = True,
              include_timing: bool = False) -> bytes:
    """``json``: key-sorted object. ``csv``: header plus one row of values,
    empty cells for failed measures."""
    if format == "json":
        text = json.dumps(report.to_dict(include_timing), sort_keys=True, indent=2) + "\n"
        return text.encode()
    if format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if header:
            w.writerow(csv_header(report.measures))
        w.writerow(csv_row(report))
        return buf.getvalue().encode()
    raise ValueError(f"unknown format {format!r}")


def csv_header(measures) -> list:
    return list(ID_COLUMNS) + list(measures)


def csv_row(report: ComplexityReport) -> list:
    cells = [report.dataset_id, report.n, report.m, report.n_classes]
    for r in report.measures.values():
        cells.append(repr(r.value) if r.ok else "")
    return cells


def format_table(report: ComplexityReport) -> str:
    lines = [f"{report.dataset_id}: n={report.n} m={report.m} classes={report.n_classes}",
             f"{'measure':<8} {'value':>10}  status"]
    for k, r in report.measures.items():
        val = f"{r.value:10.6f}" if r.ok else f"{'-':>10}"
        lines.append(f"{k:<8} {val}  {r.status if r.ok else 'failed: ' + r.reason}")
    return "\n".join(lines) + "\n"
