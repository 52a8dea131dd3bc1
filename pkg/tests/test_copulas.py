"""Survival copula evaluation and sampling."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.stats import kendalltau

from relage import (
    Generator,
    archimedean,
    clayton_oakes,
    eval_copula,
    fgm,
    gumbel_hougaard,
    independence,
    sample_copula,
)
from relage.errors import (
    DimensionMismatch,
    InvalidParameter,
    OutOfUnitInterval,
    UnsupportedFamilyForSampling,
)

# asymptotic one-sided KS critical value at significance 0.01
KS_CRIT_001 = 1.62762


def test_fgm_point_value():
    k = fgm(1.0)
    assert eval_copula(k, [0.5, 0.5, 0.5]) == pytest.approx(0.140625, abs=1e-15)


def test_independence_product():
    k = independence(2)
    assert eval_copula(k, [0.3, 0.7]) == pytest.approx(0.21, abs=1e-15)


def test_gumbel_theta_one_is_independence():
    k = gumbel_hougaard(1.0, 2)
    assert eval_copula(k, [0.3, 0.7]) == pytest.approx(0.21, abs=1e-12)


def test_parameter_validation():
    with pytest.raises(InvalidParameter):
        fgm(2.0)
    with pytest.raises(InvalidParameter):
        gumbel_hougaard(0.5, 3)
    with pytest.raises(InvalidParameter):
        clayton_oakes(0.0, 3)


def test_eval_validation():
    k = fgm(0.5)
    with pytest.raises(DimensionMismatch):
        eval_copula(k, [0.5, 0.5])
    with pytest.raises(OutOfUnitInterval):
        eval_copula(k, [0.5, 0.5, 1.5])


@pytest.mark.parametrize(
    "cop",
    [
        independence(3),
        fgm(0.7),
        fgm(-1.0),
        gumbel_hougaard(2.5, 3),
        clayton_oakes(1.5, 3),
    ],
    ids=lambda c: c.family + str(c.theta),
)
def test_boundary_values(cop):
    assert eval_copula(cop, [1.0, 1.0, 1.0]) == 1.0
    assert eval_copula(cop, [0.0, 0.6, 0.9]) <= 1e-15


@settings(max_examples=80, deadline=None)
@given(
    u=st.lists(st.floats(0.01, 0.99), min_size=3, max_size=3),
    bump=st.floats(0.0, 0.2),
    coord=st.integers(0, 2),
)
def test_nondecreasing_in_each_coordinate(u, bump, coord):
    for cop in (fgm(0.6), gumbel_hougaard(2.0, 3), clayton_oakes(0.8, 3)):
        v = list(u)
        v[coord] = min(v[coord] + bump, 1.0)
        assert eval_copula(cop, v) >= eval_copula(cop, u) - 1e-12


@settings(max_examples=60, deadline=None)
@given(u=st.lists(st.floats(0.01, 0.99), min_size=3, max_size=3))
def test_exchangeability(u):
    for cop in (fgm(-0.4), gumbel_hougaard(3.0, 3), clayton_oakes(2.0, 3)):
        base = eval_copula(cop, u)
        assert eval_copula(cop, [u[1], u[2], u[0]]) == pytest.approx(base, abs=1e-15)
        assert eval_copula(cop, [u[2], u[1], u[0]]) == pytest.approx(base, abs=1e-15)


def test_fgm_zero_theta_matches_independence_stream():
    a = sample_copula(fgm(0.0), 10_000, seed=5)
    b = sample_copula(independence(3), 10_000, seed=5)
    assert np.array_equal(a, b)


def test_independence_marginals_uniform_ks():
    w = sample_copula(independence(3), 100_000, seed=101)
    n = w.shape[0]
    crit = KS_CRIT_001 / np.sqrt(n)
    grid = np.arange(1, n + 1) / n
    for j in range(3):
        s = np.sort(w[:, j])
        dn = max(np.max(np.abs(s - grid)), np.max(np.abs(s - (grid - 1.0 / n))))
        assert dn < crit


def test_gumbel_kendall_tau():
    w = sample_copula(gumbel_hougaard(2.0, 2), 100_000, seed=7)
    tau = kendalltau(w[:, 0], w[:, 1]).statistic
    assert abs(tau - 0.5) < 0.02


@pytest.mark.parametrize(
    "cop",
    [independence(3), fgm(0.8), gumbel_hougaard(1.7, 3), clayton_oakes(1.2, 3)],
    ids=lambda c: c.family,
)
def test_joint_cdf_matches_eval(cop):
    n_samp = 100_000
    w = sample_copula(cop, n_samp, seed=31)
    rng = np.random.default_rng(17)
    for _ in range(5):
        u = rng.uniform(0.15, 0.9, size=3)
        emp = float(np.mean(np.all(w <= u, axis=1)))
        kv = eval_copula(cop, u)
        se = max(np.sqrt(kv * (1.0 - kv) / n_samp), 1e-9)
        assert abs(emp - kv) <= 4.0 * se


def test_unsupported_sampling():
    with pytest.raises(UnsupportedFamilyForSampling):
        sample_copula(fgm(0.5, n=4), 10, seed=0)
    gen = Generator(psi=lambda t: np.exp(-np.asarray(t, float)),
                    psi_inv=lambda u: -np.log(u))
    with pytest.raises(UnsupportedFamilyForSampling):
        sample_copula(archimedean(gen, 3), 10, seed=0)


def test_sampling_deterministic_given_seed():
    a = sample_copula(clayton_oakes(1.1, 3), 500, seed=9)
    b = sample_copula(clayton_oakes(1.1, 3), 500, seed=9)
    c = sample_copula(clayton_oakes(1.1, 3), 500, seed=10)
    assert np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_generic_archimedean_matches_clayton():
    theta = 1.3
    gen = Generator(
        psi=lambda t: (1.0 + np.asarray(t, float)) ** (-1.0 / theta),
        psi_inv=lambda u: np.asarray(u, float) ** (-theta) - 1.0,
    )
    ka = archimedean(gen, 3)
    kc = clayton_oakes(theta, 3)
    rng = np.random.default_rng(3)
    for _ in range(10):
        u = rng.uniform(0.05, 0.95, size=3)
        assert eval_copula(ka, u) == pytest.approx(eval_copula(kc, u), rel=1e-9)


def test_generator_inverse_by_bisection():
    gen = Generator(psi=lambda t: np.exp(-np.asarray(t, float)))
    val = gen.inverse(np.array([0.25, 0.5]))
    assert np.allclose(val, -np.log([0.25, 0.5]), atol=1e-10)
