"""Order checkers, iff criteria, sufficient criteria and cross-validation."""

from fractions import Fraction

import numpy as np
import pytest

from relage import (
    build_distortion,
    check_monotone,
    check_order,
    check_sufficient_conditions,
    compare_systems_exact,
    distortion_k_out_of_n,
    exponential,
    fgm,
    frechet,
    identity_distortion,
    parallel_distortion,
    power_distortion,
    redundancy_verdict,
    residual_verdict,
    series_distortion,
    system_lifetime,
    weibull,
)
from relage.distortion import Distortion, PolyBacking
from relage.errors import InvalidParameter
from relage.orders import (
    BOTH,
    FORWARD,
    NEITHER,
    REVERSE,
    SUFFICIENT_FAILS,
    SUFFICIENT_HOLDS,
)
from relage.structures import k_out_of_n_structure, path_sets_structure

MINMAX = path_sets_structure(3, [[1, 2], [1, 3]])
SERIES3 = k_out_of_n_structure(3, 3)


# ------------------------------------------------------------- check_order

def test_hazard_ageing_of_weibull_pair():
    x = weibull(2.0, 3.0)
    y = weibull(0.1, 2.0)
    v = check_order(x, y, "afc")
    assert v.holds_forward and not v.holds_reverse


def test_reflexivity_all_orders():
    m = weibull(1.0, 2.0)
    for order in ("hr", "rhr", "afc", "afb"):
        v = check_order(m, m, order)
        assert v.holds_forward and v.holds_reverse
        assert v.conclusion == BOTH


def test_hr_order_weibull_rates():
    a = exponential(2.0)
    b = exponential(1.0)
    v = check_order(a, b, "hr")
    assert v.holds_forward  # sf_b/sf_a = e^{x} increasing


def test_unknown_order_rejected():
    m = exponential(1.0)
    with pytest.raises(InvalidParameter):
        check_order(m, m, "mrl")


# ------------------------------------------------- compare_systems_exact

def test_compare_systems_forward_at_small_theta():
    d1 = build_distortion(MINMAX, fgm(0.3))
    d2 = build_distortion(SERIES3, fgm(0.3))
    rep = compare_systems_exact(d1, d2, "c")
    assert rep.conclusion == FORWARD
    assert rep.overall == "iff_holds"


def test_compare_systems_neither_at_large_theta():
    d1 = build_distortion(MINMAX, fgm(0.9))
    d2 = build_distortion(SERIES3, fgm(0.9))
    rep = compare_systems_exact(d1, d2, "c")
    assert rep.conclusion == NEITHER
    assert rep.overall == "iff_fails_with_witness"
    wit = rep.entries[0].verdict
    assert wit.rising is not None and wit.falling is not None


def test_compare_systems_reversed_hazard_reverse():
    d1 = build_distortion(MINMAX, fgm(1.0))
    d2 = build_distortion(SERIES3, fgm(1.0))
    rep = compare_systems_exact(d1, d2, "b")
    assert rep.conclusion == REVERSE


def test_marginal_freeness_of_exact_verdicts():
    # the exact verdict must match explicit models for several marginals
    d1 = build_distortion(MINMAX, fgm(0.3))
    d2 = build_distortion(SERIES3, fgm(0.3))
    rep = compare_systems_exact(d1, d2, "c")
    assert rep.conclusion == FORWARD
    for marg in (exponential(1.0), weibull(1.0, 2.0), frechet(1.0, 3.0)):
        t1 = system_lifetime(d1, marg)
        t2 = system_lifetime(d2, marg)
        v = check_order(t1, t2, "afc")
        assert v.holds_forward


def test_series_vs_series_constant_ratio():
    rep = compare_systems_exact(series_distortion(2), series_distortion(3), "c")
    assert rep.conclusion == BOTH  # H ratio 2/3 constant


# --------------------------------------------- sufficient conditions

def test_sufficient_conditions_hold_for_ordered_kn_pair():
    rep = check_sufficient_conditions(
        distortion_k_out_of_n(2, 4),
        distortion_k_out_of_n(3, 4),
        exponential(1.0),
        exponential(2.0),
        "c",
    )
    assert rep.overall == SUFFICIENT_HOLDS
    assert rep.conclusion == FORWARD
    assert all(e.holds for e in rep.entries[:2])


def test_sufficient_conditions_fail_without_rhr_precondition():
    rep = check_sufficient_conditions(
        parallel_distortion(3),
        parallel_distortion(3),
        weibull(2.0, 3.0),
        weibull(0.1, 2.0),
        "c",
    )
    assert rep.overall == SUFFICIENT_FAILS
    assert rep.conclusion is None
    names = [e.name for e in rep.entries]
    rhr_entry = rep.entries[names.index("(iii) Y below X in reversed-hazard order")]
    assert not rhr_entry.holds
    afc_entry = rep.entries[names.index("(iii) X ages faster than Y in hazard")]
    assert afc_entry.holds


def test_sufficient_conditions_degenerate_equal_inputs():
    d = series_distortion(3)
    m = exponential(1.0)
    rep = check_sufficient_conditions(d, d, m, m, "c")
    assert rep.overall == SUFFICIENT_HOLDS


def test_sufficient_conditions_reversed_hazard_mode():
    rep = check_sufficient_conditions(
        parallel_distortion(2),
        parallel_distortion(3),
        exponential(2.0),
        exponential(1.0),
        "b",
    )
    assert rep.overall == SUFFICIENT_HOLDS
    assert rep.conclusion == FORWARD


def test_condition_two_records_both_alternatives():
    rep = check_sufficient_conditions(
        distortion_k_out_of_n(2, 4),
        distortion_k_out_of_n(3, 4),
        exponential(1.0),
        exponential(2.0),
        "c",
    )
    twos = [e for e in rep.entries if e.name.startswith("(ii)")]
    assert len(twos) == 2


# ----------------------------------------------------------- redundancy

def test_redundancy_series_prefers_component_level():
    for n in (2, 3, 4, 5):
        rep = redundancy_verdict(series_distortion(n), 1, "c", "iff")
        assert rep.conclusion == REVERSE
        assert rep.metadata["cross_validated"] in (REVERSE, BOTH)


def test_redundancy_identity_both_directions():
    rep = redundancy_verdict(identity_distortion(), 3, "c", "iff")
    assert rep.conclusion == BOTH


def test_redundancy_gumbel_series_reversed_hazard():
    d = power_distortion(3 ** (1 / 2.0))
    suff = redundancy_verdict(d, 1, "b", "sufficient")
    assert suff.overall == SUFFICIENT_HOLDS
    assert suff.conclusion == FORWARD
    for m in (1, 2):
        rep = redundancy_verdict(d, m, "b", "iff")
        assert rep.conclusion in (FORWARD, BOTH)


def test_redundancy_parallel_reversed_hazard_iff():
    rep = redundancy_verdict(parallel_distortion(3), 1, "b", "iff")
    assert rep.conclusion in (FORWARD, BOTH)


def test_redundancy_rejects_sufficient_for_mode_c():
    with pytest.raises(InvalidParameter):
        redundancy_verdict(series_distortion(2), 1, "c", "sufficient")
    with pytest.raises(InvalidParameter):
        redundancy_verdict(series_distortion(2), 0, "c", "iff")


# ------------------------------------------------------------- residual

def test_residual_series_trivial():
    rep = residual_verdict(series_distortion(4), "c", "iff")
    assert rep.conclusion == BOTH  # p H'/H identically zero


def test_residual_k_out_of_n_hazard():
    for k, n in ((1, 3), (2, 3), (2, 5), (4, 6)):
        rep = residual_verdict(distortion_k_out_of_n(k, n), "c", "iff")
        assert rep.conclusion in (FORWARD, BOTH)
        suff = residual_verdict(distortion_k_out_of_n(k, n), "c", "sufficient")
        assert suff.overall == SUFFICIENT_HOLDS


def test_residual_parallel_reversed_hazard():
    for n in (2, 4):
        rep = residual_verdict(parallel_distortion(n), "b", "iff")
        assert rep.conclusion in (FORWARD, BOTH)


def test_residual_rejects_sufficient_for_mode_b():
    with pytest.raises(InvalidParameter):
        residual_verdict(parallel_distortion(2), "b", "sufficient")


def _random_poly_distortion(rng) -> Distortion:
    # integrate a random nonnegative derivative, then normalize h(1) = 1
    deg = int(rng.integers(1, 5))
    deriv = [Fraction(int(rng.integers(0, 4))) for _ in range(deg)]
    if all(c == 0 for c in deriv):
        deriv[0] = Fraction(1)
    coeffs = [Fraction(0)] + [c / (i + 1) for i, c in enumerate(deriv)]
    total = sum(coeffs)
    coeffs = [c / total for c in coeffs]
    return Distortion(PolyBacking(coeffs), "random-poly")


def test_residual_iff_equals_two_parameter_property():
    # p H'/H decreasing iff H(p/q)/H(p) decreasing in p for every q
    rng = np.random.default_rng(2024)
    for _ in range(10):
        d = _random_poly_distortion(rng)
        iff = check_monotone(d.pHpH, 1e-3, 1 - 1e-3, grid_points=601)
        qs = np.linspace(0.05, 0.95, 30)
        two_param = True
        for q in qs:
            ps = np.linspace(1e-3 * q, q * (1 - 1e-3), 30)
            vals = d.Hfun(ps / q) / d.Hfun(ps)
            if np.any(np.diff(vals) > 1e-9 * np.maximum(1, np.abs(vals[:-1]))):
                two_param = False
                break
        assert iff.is_decreasing == two_param


def test_residual_cross_validation_against_models():
    # explicit residual models must agree with the marginal-free verdict
    d = distortion_k_out_of_n(2, 4)
    rep = residual_verdict(d, "c", "iff")
    assert rep.conclusion == FORWARD
    assert rep.metadata.get("cross_validated_t") == [0.25, 1.0, 2.5]
