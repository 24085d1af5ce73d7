import io

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from datacomplexity import (ComplexityError, Dataset, IngestionError, IngestionOptions,
                            dumps_dataset, load_dataset, ovo_aggregate, ovo_views, to_numeric)
from datacomplexity.dataset import NUMERIC, SYMBOLIC, DatasetView
from datacomplexity.synth import make_random

from conftest import line


def test_load_basic():
    src = b"a,b,cls\n1,2,a\n3,4,a\n5,6,b\n7,8.5,b\n"
    d = load_dataset(src, "cls")
    assert (d.n, d.m, d.n_classes) == (4, 2, 2)
    assert d.class_counts.tolist() == [2, 2]
    assert [c.kind for c in d.columns] == [NUMERIC, NUMERIC]
    assert d.columns[1].observed_range == (2.0, 8.5)


def test_symbolic_inference():
    src = b"colour,x,y\nred,1,p\ngreen,2,q\nblue,3,p\nred,4,q\n"
    d = load_dataset(src, "y")
    col = d.columns[0]
    assert col.kind == SYMBOLIC
    assert col.categories == ("red", "green", "blue")
    assert col.values.tolist() == [0, 1, 2, 0]


def test_label_by_index_and_tabs():
    src = b"cls\tx\na\t1\nb\t2\n"
    d = load_dataset(src, 0)
    assert d.feature_names == ["x"]
    assert d.class_names == ("a", "b")


def test_missing_cell_is_an_error_naming_the_cell():
    src = b"x,z,y\n1,1,a\n,2,b\n3,3,a\n"
    with pytest.raises(IngestionError, match=r"line 3, column 'x'"):
        load_dataset(src, "y")


def test_imputation():
    src = b"x,s,y\n1,u,a\n,v,b\n5,,a\n3,u,b\n"
    d = load_dataset(src, "y", IngestionOptions(impute=True))
    assert d.columns[0].values.tolist() == [1.0, 3.0, 5.0, 3.0]
    s = d.columns[1]
    assert [s.categories[k] for k in s.values] == ["u", "v", "u", "u"]


def test_empty_and_bad_inputs():
    with pytest.raises(IngestionError):
        load_dataset(b"", 0)
    with pytest.raises(IngestionError):
        load_dataset(b"x,y\n", "y")
    with pytest.raises(IngestionError):
        load_dataset(b"x,y\n1,a\n2,b\n", "nope")


def test_single_class_accepted_but_flagged():
    d = load_dataset(b"x,y\n1,a\n2,a\n", "y")
    assert d.n_classes == 1
    assert d.warnings


def test_text_stream_and_path(tmp_path):
    text = "x,y\n1,a\n2,b\n"
    assert load_dataset(io.StringIO(text), "y").n == 2
    p = tmp_path / "toy.csv"
    p.write_text(text)
    d = load_dataset(p, "y")
    assert d.name == "toy"


def test_immutable():
    d = line([1, 2, 3], "aab")
    with pytest.raises(ValueError):
        d.labels[0] = 1
    with pytest.raises(ValueError):
        d.columns[0].values[0] = 9.0
    with pytest.raises(AttributeError):
        d.name = "other"


def test_invalid_construction():
    with pytest.raises(ComplexityError):
        line([1], "a")
    with pytest.raises(ComplexityError):
        Dataset.from_arrays(np.array([[np.nan], [1.0]]), ["a", "b"])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_round_trip(seed):
    d = make_random(np.random.default_rng(seed), n=30)
    back = load_dataset(dumps_dataset(d).encode(), "class")
    assert back.class_names == d.class_names
    assert np.array_equal(back.labels, d.labels)
    assert back.class_counts.tolist() == d.class_counts.tolist()
    for a, b in zip(d.columns, back.columns):
        assert a.name == b.name and a.kind == b.kind
        if a.kind == NUMERIC:
            assert np.array_equal(a.values, b.values)
        else:
            assert [a.categories[k] for k in a.values] == [b.categories[k] for k in b.values]


def test_to_numeric_examples():
    d = Dataset.from_arrays(np.array([[2, "x", 5], [7, "y", 5], [12, "x", 5]], dtype=object),
                            ["a", "b", "a"], symbolic=[1])
    X = to_numeric(d)
    assert X[:, 0].tolist() == [0.0, 0.5, 1.0]
    assert X[:, 1].tolist() == [0.0, 1.0, 0.0]
    assert X[:, 2].tolist() == [0.0, 0.0, 0.0]


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_to_numeric_range_and_order(seed):
    d = make_random(np.random.default_rng(seed), n=40)
    X = to_numeric(d)
    assert X.min() >= 0 and X.max() <= 1
    for j, c in enumerate(d.columns):
        raw = c.values.astype(float)
        order = np.argsort(raw, kind="stable")
        assert np.all(np.diff(X[order, j]) >= 0)


def test_to_numeric_uses_view_rows():
    d = line([0, 5, 10, 100], "aabb")
    v = DatasetView(d, np.array([0, 1, 2]))
    assert to_numeric(v)[:, 0].tolist() == [0.0, 0.5, 1.0]


@pytest.mark.parametrize("n_c, pairs", [(2, 1), (3, 3), (4, 6)])
def test_ovo_views(n_c, pairs):
    labels = [f"k{i % n_c}" for i in range(4 * n_c)]
    d = line(range(len(labels)), labels)
    views = ovo_views(d)
    assert len(views) == pairs
    for v in views:
        a, b = v.class_pair
        assert set(v.labels.tolist()) == {a, b}
        assert set(v.row_index.tolist()) == set(np.flatnonzero(np.isin(d.labels, [a, b])).tolist())
    if n_c == 2:
        assert views[0].n == d.n


def test_ovo_views_single_class():
    with pytest.raises(ComplexityError):
        ovo_views(line([1, 2], "aa"))


def test_ovo_aggregate():
    assert ovo_aggregate([0.2, 0.4, 0.6]) == pytest.approx(0.4)
    assert ovo_aggregate([0.7]) == 0.7
    assert ovo_aggregate([0, 1]) == 0.5
    with pytest.raises(ComplexityError):
        ovo_aggregate([])


def test_view_invariants():
    d = line([1, 2, 3, 4], "abca")
    with pytest.raises(ComplexityError):
        DatasetView(d, np.array([0, 0]))
    with pytest.raises(ComplexityError):
        DatasetView(d, np.array([0, 2]), (0, 1))
