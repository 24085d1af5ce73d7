import warnings

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from datacomplexity import Dataset, interpolate, l1, l2, l3, train_linear
from datacomplexity.dataset import ovo_views, to_numeric
from datacomplexity.linearity import _fit, class_quotas
from datacomplexity.synth import make_clusters, make_random, make_rings

from conftest import line
from oracles import _primal, svm_qp_oracle


def small_problem(seed):
    r = np.random.default_rng(seed)
    n, m = int(r.integers(2, 7)), int(r.integers(1, 3))
    X = r.random((n, m))
    y = np.where(r.random(n) < 0.5, -1.0, 1.0)
    y[:2] = [-1.0, 1.0]
    return X, y


# ---- solver against the exhaustive QP oracle ----

@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000))
def test_solver_matches_qp_oracle(seed):
    X, y = small_problem(seed)
    obj, w, b, slack = svm_qp_oracle(X, y)
    model = _fit(X, y)
    ours, _ = _primal(X, y, model.weights, model.bias, 1.0)
    assert ours >= obj - 1e-9
    assert ours - obj < 1e-3
    s_or, s_ours = np.mean(slack), model.slacks.mean()
    assert abs(s_or / (1 + s_or) - s_ours / (1 + s_ours)) < 1e-3


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 100_000))
def test_l2_matches_oracle_classifier(seed):
    X, y = small_problem(seed)
    _, w, b, _ = svm_qp_oracle(X, y)
    model = _fit(X, y)
    f_or = X @ w + b
    f_ours = model.decision(X)
    if min(np.abs(f_or).min(), np.abs(f_ours).min()) < 1e-3 or abs(b - model.bias) > 1e-3:
        return  # boundary case or a flat bias interval
    assert np.mean(y * f_ours <= 0) == np.mean(y * f_or <= 0)


def test_kkt_residuals(rng):
    d = make_random(rng, n=150, m=5, n_classes=2, symbolic_fraction=0)
    view = ovo_views(d)[0]
    X, y = to_numeric(view), view.binary_labels()
    model = train_linear(view)
    a, C = model.alphas, model.regularization
    margin = y * model.decision(X)
    assert np.allclose(model.slacks, np.maximum(0, 1 - margin), atol=1e-12)
    assert np.allclose(model.weights, (a * y) @ X, atol=1e-6)
    assert a.min() >= 0 and a.max() <= C
    assert abs(a @ y) < 1e-6
    # complementary slackness after the active-set polish
    tol = 1e-6
    assert np.all(margin[a == 0] >= 1 - tol)
    assert np.all(margin[a == C] <= 1 + tol)
    free = (a > 0) & (a < C)
    assert np.all(np.abs(margin[free] - 1) <= tol)


def test_two_point_hand_value():
    # solver on raw coordinates: the hard-margin optimum has alpha = 0.5 <= C
    model = _fit(np.array([[0.0], [2.0]]), np.array([-1.0, 1.0]))
    assert model.weights[0] == pytest.approx(1.0, abs=1e-9)
    assert model.bias == pytest.approx(-1.0, abs=1e-9)
    assert np.all(model.slacks < 1e-9)


def test_two_point_scaled_is_box_limited():
    # scaled to {0, 1}, the hard margin would need alpha = 2 > C = 1
    model = train_linear(line([0, 2], "ab"))
    assert model.weights[0] == pytest.approx(1.0, abs=1e-9)
    assert model.alphas.tolist() == [1.0, 1.0]
    assert model.slacks.sum() == pytest.approx(1.0, abs=1e-9)


def test_separable_raw_has_tiny_slacks(rng):
    X = np.vstack([rng.random((30, 2)), rng.random((30, 2)) + [6.0, 0.0]])
    y = np.repeat([-1.0, 1.0], 30)
    model = _fit(X, y)
    assert model.slacks.max() < 1e-6


@pytest.mark.parametrize("m", [1, 2, 5])
def test_separable_clusters(m):
    d = make_clusters(50, 2, separation=10.0, spread=1.0, seed=1, n_features=m)
    assert l2(d) == 0 and l3(d, seed=0) == 0
    # on scaled data a zero L1 needs C above the hard-margin multipliers
    assert l1(d, C=100.0) < 1e-6


def test_l1_zero_implies_l2_zero(rng):
    for seed in range(20):
        d = make_random(np.random.default_rng(seed), n=40, n_classes=2)
        model = train_linear(d, C=100.0)
        if model.slacks.max() < 1e-9:
            assert l2(d, C=100.0) == 0


def test_opposite_label_duplicates():
    X = np.array([[0.0, 0.0], [0.0, 0.0], [1.0, 1.0], [0.2, 0.9]])
    d = Dataset.from_arrays(X, ["a", "b", "b", "a"])
    model = train_linear(d)
    assert model.slacks[0] + model.slacks[1] >= 2 - 1e-6
    assert max(model.slacks[0], model.slacks[1]) >= 1 - 1e-6
    assert l2(d) > 0


def test_nonconvergence_warns():
    X, y = small_problem(3)
    with pytest.warns(RuntimeWarning):
        model = _fit(np.vstack([X] * 20) + np.random.default_rng(0).random((len(X) * 20, X.shape[1])),
                     np.tile(y, 20), max_epochs=0)
    assert not model.converged


def test_hand_l2():
    assert l2(line([0, 1, 10, 5], "aaab")) == pytest.approx(0.25)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 100_000))
def test_bounds(seed):
    d = make_random(np.random.default_rng(seed), n=60)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        for v in (l1(d), l2(d), l3(d, seed=seed)):
            assert 0 <= v <= 1
        assert l1(d) < 1


# ---- interpolation ----

def test_interpolation_is_convex_combination(rng):
    d = make_random(rng, n=50, m=4, symbolic_fraction=0)
    X = to_numeric(d)
    for s in interpolate(d, seed=7):
        a, b = s.parents
        assert d.labels[a] == d.labels[b] == s.label
        assert np.allclose(s.point, s.coefficient * X[a] + (1 - s.coefficient) * X[b])
        assert 0 <= s.coefficient < 1


def test_interpolation_endpoint():
    d = line([0, 1, 4, 9], "aabb")
    X = to_numeric(d)
    for s in interpolate(d, count=50, seed=1):
        a, b = s.parents
        if a == b:
            assert np.allclose(s.point, X[a])


def test_interpolation_stays_in_class_box(rng):
    d = make_random(rng, n=80, m=3, n_classes=3, symbolic_fraction=0)
    X = to_numeric(d)
    for s in interpolate(d, seed=2):
        members = X[d.labels == s.label]
        assert np.all(s.point >= members.min(0) - 1e-12)
        assert np.all(s.point <= members.max(0) + 1e-12)


def test_interpolation_proportions():
    d = line(range(30), ["a"] * 20 + ["b"] * 10)
    labels = [s.label for s in interpolate(d, seed=0)]
    assert labels.count(0) == 20 and labels.count(1) == 10
    assert class_quotas(np.array([0] * 20 + [1] * 10), 7) == {0: 5, 1: 2}


def test_symbolic_cells_copy_a_parent():
    X = np.array([[0, "u"], [1, "v"], [2, "w"], [3, "u"]], dtype=object)
    d = Dataset.from_arrays(X, list("aabb"), symbolic=[1])
    codes = to_numeric(d)[:, 1]
    for s in interpolate(d, count=40, seed=3):
        assert s.point[1] in (codes[s.parents[0]], codes[s.parents[1]])


# ---- L3 ----

def test_l3_deterministic():
    d = make_random(np.random.default_rng(5), n=120, n_classes=3)
    assert l3(d, seed=11) == l3(d, seed=11)


def test_l3_zero_when_separable():
    d = make_clusters(40, 3, separation=8.0, spread=0.4, seed=2)
    assert l3(d, seed=1) == 0


def test_l3_exceeds_l2_on_concave_classes():
    d = make_rings(100, seed=0)
    assert l3(d, seed=0) > l2(d)
