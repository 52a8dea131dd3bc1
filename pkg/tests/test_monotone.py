"""The monotonicity engine."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from relage import check_monotone, compare_systems_exact, fgm
from relage.distortion import build_distortion
from relage.errors import NonFiniteValue
from relage.monotone import CONSTANT, DECREASING, INCREASING, NON_MONOTONE
from relage.structures import k_out_of_n_structure, path_sets_structure


def test_square_increasing():
    v = check_monotone(lambda p: p**2, 1e-4, 1 - 1e-4)
    assert v.classification == INCREASING
    assert v.is_increasing and not v.is_decreasing


def test_constant():
    v = check_monotone(lambda p: np.full_like(p, 0.7), 0.0, 1.0)
    assert v.classification == CONSTANT
    assert v.is_increasing and v.is_decreasing


def test_decreasing():
    v = check_monotone(lambda p: 1.0 / p, 0.1, 2.0)
    assert v.classification == DECREASING


def test_example_ratio_non_monotone_with_witnesses():
    # the H-ratio of the min-max and series FGM systems at theta = 0.9
    d1 = build_distortion(path_sets_structure(3, [[1, 2], [1, 3]]), fgm(0.9))
    d2 = build_distortion(k_out_of_n_structure(3, 3), fgm(0.9))
    v = check_monotone(lambda p: d1.Hfun(p) / d2.Hfun(p), 1e-4, 1 - 1e-4)
    assert v.classification == NON_MONOTONE
    assert v.rising is not None and v.falling is not None
    # stored witnesses must violate both directions beyond tolerance
    tol = 1e-9
    assert v.rising.f2 - v.rising.f1 > tol * max(1, abs(v.rising.f1), abs(v.rising.f2))
    assert v.falling.f1 - v.falling.f2 > tol * max(1, abs(v.falling.f1), abs(v.falling.f2))
    assert v.rising.x1 < v.rising.x2
    assert v.falling.x1 < v.falling.x2


def test_non_finite_raises_with_location():
    def f(x):
        return np.where(x > 0.5, np.nan, x)

    with pytest.raises(NonFiniteValue) as exc:
        check_monotone(f, 0.0, 1.0)
    assert exc.value.where > 0.5


def test_tiny_wiggle_below_tolerance_is_constant():
    v = check_monotone(lambda p: 1.0 + 1e-13 * np.sin(20 * p), 0.0, 1.0)
    assert v.classification == CONSTANT


def test_wiggle_above_tolerance_detected():
    v = check_monotone(lambda p: 1.0 + 1e-6 * np.sin(20 * p), 0.0, 1.0, tol=1e-9)
    assert v.classification == NON_MONOTONE
    assert v.sign_changes >= 2


def test_log_spaced_grid():
    v = check_monotone(lambda x: 30 * x, 0.05, 3.0, log_spaced=True)
    assert v.classification == INCREASING


@settings(max_examples=100, deadline=None)
@given(slope=st.floats(-2.0, 2.0), intercept=st.floats(-1.0, 1.0))
def test_affine_classified_by_slope(slope, intercept):
    v = check_monotone(lambda x: slope * x + intercept, 0.0, 1.0, grid_points=201)
    scale = max(1.0, abs(intercept), abs(slope + intercept))
    if abs(slope) <= 1e-9 * scale:
        assert v.classification == CONSTANT
    elif slope > 0:
        assert v.classification == INCREASING
    else:
        assert v.classification == DECREASING


@settings(max_examples=50, deadline=None)
@given(
    a=st.floats(0.05, 2.0),
    b=st.floats(0.05, 2.0),
    c=st.floats(-1.0, 1.0),
)
def test_soundness_on_random_verdicts(a, b, c):
    # engine soundness: 200 random point pairs obey any monotone verdict
    def f(x):
        return a * x**2 + b * x + c * np.sin(3 * x)

    v = check_monotone(f, 0.0, 2.0, grid_points=501)
    rng = np.random.default_rng(0)
    xs = np.sort(rng.uniform(0.0, 2.0, size=(200, 2)), axis=1)
    f1, f2 = f(xs[:, 0]), f(xs[:, 1])
    thr = 5e-9 * np.maximum(1.0, np.maximum(np.abs(f1), np.abs(f2)))
    if v.classification == INCREASING:
        assert np.all(f2 - f1 >= -thr)
    elif v.classification == DECREASING:
        assert np.all(f1 - f2 >= -thr)
    elif v.classification == NON_MONOTONE:
        assert v.rising is not None and v.falling is not None


def test_exact_reports_grid_metadata():
    rep = compare_systems_exact(
        build_distortion(path_sets_structure(3, [[1, 2], [1, 3]]), fgm(0.3)),
        build_distortion(k_out_of_n_structure(3, 3), fgm(0.3)),
        "c",
        grid_points=101,
    )
    assert "101" in rep.entries[0].verdict.grid
