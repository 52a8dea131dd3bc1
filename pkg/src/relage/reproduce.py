"""Registry of named reference cases with built-in assertions.

Each case rebuilds a known comparison from first principles and asserts the
expected classification; the returned report carries one entry per
assertion plus pass/fail counts. A failed assertion does not raise: the
report records it (the CLI still exits 0 for a completed run).

Known discrepancy: case ce-3.2 targets a non-monotone classification, but
the ratio it checks is strictly increasing (its logarithmic slope exceeds 1
everywhere; see the repository notes). Stable arithmetic therefore reports
"decreasing" for the defining ratio and the case records a failed target
assertion by construction.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ._util import DEFAULT_EPS, DEFAULT_GRID, DEFAULT_TOL
from .copulas import fgm
from .distortion import (
    Distortion,
    PolyBacking,
    build_distortion,
    distortion_k_out_of_n,
    power_distortion,
)
from .errors import RelageError
from .lifetimes import frechet, system_lifetime, weibull
from .monotone import check_monotone
from .orders import (
    BOTH,
    FORWARD,
    NEITHER,
    REVERSE,
    SUFFICIENT_HOLDS,
    check_order,
    compare_systems_exact,
    redundancy_verdict,
    residual_verdict,
)
from .structures import k_out_of_n_structure, path_sets_structure


class _Case:
    def __init__(self, case_id: str, description: str):
        self.report = {
            "case": case_id,
            "description": description,
            "assertions": [],
            "passed": 0,
            "failed": 0,
        }

    def check(self, name: str, ok: bool, detail: str = ""):
        self.report["assertions"].append({"name": name, "ok": bool(ok), "detail": detail})

    def done(self) -> dict:
        self.report["passed"] = sum(1 for a in self.report["assertions"] if a["ok"])
        self.report["failed"] = sum(1 for a in self.report["assertions"] if not a["ok"])
        return self.report


def _minmax_structure():
    return path_sets_structure(3, [[1, 2], [1, 3]])


def _series3_structure():
    return k_out_of_n_structure(3, 3)


def _expected_minmax_fgm(theta: Fraction) -> list[Fraction]:
    """2p^2 - p^3 - theta p^3 (1-p)^3, ascending coefficients."""
    # (1-p)^3 = 1 - 3p + 3p^2 - p^3
    cubic = [Fraction(1), Fraction(-3), Fraction(3), Fraction(-1)]
    out = [Fraction(0)] * 7
    out[2], out[3] = Fraction(2), Fraction(-1)
    for i, c in enumerate(cubic):
        out[3 + i] -= theta * c
    return out


def _expected_series_fgm(theta: Fraction) -> list[Fraction]:
    """p^3 + theta p^3 (1-p)^3."""
    cubic = [Fraction(1), Fraction(-3), Fraction(3), Fraction(-1)]
    out = [Fraction(0)] * 7
    out[3] = Fraction(1)
    for i, c in enumerate(cubic):
        out[3 + i] += theta * c
    return out


def _case_ex_1_1(cfg) -> dict:
    case = _Case("ex-1.1", "min-max system distortion under the FGM copula")
    for num in (-10, -5, 0, 5, 10):
        theta = Fraction(num, 10)
        d = build_distortion(_minmax_structure(), fgm(float(theta)))
        got = d.backing.coeffs if isinstance(d.backing, PolyBacking) else None
        expected = tuple(_expected_minmax_fgm(theta))
        # trim trailing zeros for comparison
        exp = list(expected)
        while len(exp) > 1 and exp[-1] == 0:
            exp.pop()
        ok = got is not None and list(got) == exp
        case.check(
            f"theta={float(theta):+.1f}: h(p) = 2p^2 - p^3 - theta p^3 (1-p)^3 exactly",
            ok,
            f"coefficients {None if got is None else [str(c) for c in got]}",
        )
    k = fgm(1.0)
    val = k.eval([0.5, 0.5, 0.5])
    case.check("FGM theta=1 at (.5,.5,.5) equals 0.140625", abs(val - 0.140625) < 1e-15,
               f"value {val!r}")
    return case.done()


def _ex31_distortions(theta: float):
    d1 = build_distortion(_minmax_structure(), fgm(theta))
    d2 = build_distortion(_series3_structure(), fgm(theta))
    return d1, d2


def _case_ex_3_1(cfg) -> dict:
    case = _Case(
        "ex-3.1",
        "min-max vs series of three FGM components: hazard ageing verdicts",
    )
    for num in range(-9, 6):
        theta = num / 10.0
        d1, d2 = _ex31_distortions(theta)
        rep = compare_systems_exact(d1, d2, "c", **_cmp_kw(cfg))
        case.check(
            f"theta={theta:+.2f}: system 1 ages faster (H1/H2 decreasing)",
            rep.conclusion == FORWARD,
            f"conclusion {rep.conclusion}",
        )
    for num in range(75, 101, 5):
        theta = num / 100.0
        d1, d2 = _ex31_distortions(theta)
        rep = compare_systems_exact(d1, d2, "c", **_cmp_kw(cfg))
        wit = rep.entries[0].verdict
        has_witness = wit.rising is not None and wit.falling is not None
        case.check(
            f"theta={theta:+.2f}: non-monotone with witnesses",
            rep.conclusion == NEITHER and has_witness,
            f"conclusion {rep.conclusion}",
        )
    return case.done()


def _case_ce_3_1(cfg) -> dict:
    case = _Case(
        "ce-3.1",
        "three-component parallel systems on crossing Weibull marginals: "
        "hazard ageing fails at system level",
    )
    x_model = weibull(2.0, 3.0)
    y_model = weibull(0.1, 2.0)
    xs = np.linspace(0.2, 2.5, 7)
    ratio = x_model.hazard(xs) / y_model.hazard(xs)
    case.check(
        "component hazard ratio equals 30x",
        bool(np.all(np.abs(ratio - 30.0 * xs) <= 1e-9 * 30.0 * xs)),
        f"max rel err {float(np.max(np.abs(ratio / (30 * xs) - 1))):.2e}",
    )
    comp = check_order(x_model, y_model, "afc", **_order_kw(cfg))
    case.check("X ages faster than Y in hazard", comp.holds_forward,
               comp.detail.classification)
    rhr = check_order(y_model, x_model, "rhr", **_order_kw(cfg))
    case.check("reversed-hazard precondition Y below X fails", not rhr.holds_forward,
               rhr.detail.classification)
    d = distortion_k_out_of_n(1, 3)
    tau1 = system_lifetime(d, x_model)
    tau2 = system_lifetime(d, y_model)
    sysv = check_order(tau1, tau2, "afc", x_range=(0.05, 3.0), **_order_kw(cfg))
    case.check(
        "system hazard ratio non-monotone on [0.05, 3] with both witnesses",
        sysv.conclusion == NEITHER
        and sysv.detail.rising is not None
        and sysv.detail.falling is not None,
        sysv.detail.classification,
    )
    return case.done()


def _case_ce_3_2(cfg) -> dict:
    case = _Case(
        "ce-3.2",
        "two-component series systems on crossing Frechet marginals: "
        "reversed-hazard ageing at system level",
    )
    x_model = frechet(2.1, 7.0)
    y_model = frechet(2.0, 3.0)
    comp = check_order(x_model, y_model, "afb", **_order_kw(cfg))
    case.check("X ages faster than Y in reversed hazard", comp.holds_forward,
               comp.detail.classification)
    hr = check_order(x_model, y_model, "hr", **_order_kw(cfg))
    case.check("hazard-rate precondition X below Y fails", not hr.holds_forward,
               hr.detail.classification)
    d = distortion_k_out_of_n(2, 2)
    tau1 = system_lifetime(d, x_model)
    tau2 = system_lifetime(d, y_model)
    sysv = check_order(tau1, tau2, "afb", x_range=(0.5, 10.0), **_order_kw(cfg))
    case.check(
        "system reversed-hazard ratio non-monotone on [0.5, 10] "
        "(known discrepancy: the ratio is provably monotone)",
        sysv.conclusion == NEITHER,
        f"classified {sysv.detail.classification}",
    )
    return case.done()


def _case_ex_5_1(cfg) -> dict:
    case = _Case(
        "ex-5.1",
        "min-max vs series of three FGM components: reversed-hazard ageing",
    )
    for num in range(-5, 6):
        theta = num / 5.0
        d1, d2 = _ex31_distortions(theta)
        rep = compare_systems_exact(d1, d2, "b", **_cmp_kw(cfg))
        case.check(
            f"theta={theta:+.1f}: system 1 ages slower in reversed hazard "
            "(R2/R1 increasing)",
            rep.conclusion == REVERSE,
            f"conclusion {rep.conclusion}",
        )
    return case.done()


def _case_ex_4_1(cfg) -> dict:
    case = _Case(
        "ex-4.1",
        "series systems under Gumbel-Hougaard dependence: system-level spares "
        "age faster in reversed hazard",
    )
    for n, theta in ((2, 1.5), (3, 2.0), (4, 3.0)):
        a = n ** (1.0 / theta)
        d = power_distortion(a, label=f"gumbel_series(n={n}, theta={theta:g})")
        suff = redundancy_verdict(d, 1, "b", "sufficient", **_verdict_kw(cfg))
        case.check(
            f"(n={n}, theta={theta:g}): p R'/R decreasing and positive",
            suff.overall == SUFFICIENT_HOLDS and suff.conclusion == FORWARD,
            suff.overall,
        )
        for m in (1, 2):
            iff = redundancy_verdict(d, m, "b", "iff", **_verdict_kw(cfg))
            case.check(
                f"(n={n}, theta={theta:g}, m={m}): iff criterion agrees",
                iff.conclusion in (FORWARD, BOTH),
                f"conclusion {iff.conclusion}",
            )
    return case.done()


def _case_cor_4_1(cfg) -> dict:
    case = _Case(
        "cor-4.1",
        "series systems with independent components: one spare favors the "
        "component level in hazard ageing",
    )
    for n in (2, 3, 4, 5):
        d = distortion_k_out_of_n(n, n)
        rep = redundancy_verdict(d, 1, "c", "iff", **_verdict_kw(cfg))
        case.check(
            f"n={n}: replicated system ages slower (criterion increasing)",
            rep.conclusion == REVERSE,
            f"conclusion {rep.conclusion}, cross={rep.metadata.get('cross_validated')}",
        )
    return case.done()


def _case_cor_5_1(cfg) -> dict:
    case = _Case(
        "cor-5.1",
        "k-out-of-n with independent components: used components age faster "
        "than the used system (hazard)",
    )
    for n in range(1, 7):
        for k in range(1, n + 1):
            d = distortion_k_out_of_n(k, n)
            rep = residual_verdict(d, "c", "iff", **_verdict_kw(cfg))
            case.check(
                f"(k,n)=({k},{n}): p H'/H decreasing",
                rep.conclusion in (FORWARD, BOTH),
                f"conclusion {rep.conclusion}",
            )
    return case.done()


def _case_cor_5_2(cfg) -> dict:
    case = _Case(
        "cor-5.2",
        "parallel systems with independent components: used components age "
        "faster than the used system (reversed hazard)",
    )
    for n in range(2, 7):
        d = distortion_k_out_of_n(1, n)
        rep = residual_verdict(d, "b", "iff", **_verdict_kw(cfg))
        case.check(
            f"n={n}: two-level ratio increasing for every q",
            rep.conclusion in (FORWARD, BOTH),
            f"conclusion {rep.conclusion}",
        )
    return case.done()


def _knm_pairs(n_max: int):
    return [(k, n) for n in range(1, n_max + 1) for k in range(1, n + 1)]


def _case_lemma_2_3(cfg) -> dict:
    case = _Case(
        "lemma-2.3",
        "hazard-multiplier properties of k-out-of-n distortions (n <= 8)",
    )
    kw = _mono_kw(cfg)
    dists = {kn: distortion_k_out_of_n(*kn) for kn in _knm_pairs(8)}
    bad = []
    for (k, n), d in dists.items():
        if not check_monotone(d.Hfun, *_prange(cfg), **kw).is_decreasing:
            bad.append(("H", k, n))
        if not check_monotone(d.one_minus_pHpH, *_prange(cfg), **kw).is_decreasing:
            bad.append(("(1-p)H'/H", k, n))
    case.check("H decreasing and (1-p)H'/H decreasing for all pairs", not bad, str(bad[:5]))
    bad = []
    count = 0
    for (k, n) in _knm_pairs(8):
        for (l, m) in _knm_pairs(8):
            if k <= l and (m - l) <= (n - k):
                count += 1
                ratio = lambda p, a=dists[(k, n)], b=dists[(l, m)]: a.Hfun(p) / b.Hfun(p)
                if not check_monotone(ratio, *_prange(cfg), **kw).is_decreasing:
                    bad.append((k, n, l, m))
    case.check(
        f"H ratio decreasing for all {count} admissible quadruples", not bad, str(bad[:5])
    )
    return case.done()


def _case_lemma_2_4(cfg) -> dict:
    case = _Case(
        "lemma-2.4",
        "reversed-hazard-multiplier properties of k-out-of-n distortions (n <= 8)",
    )
    kw = _mono_kw(cfg)
    dists = {kn: distortion_k_out_of_n(*kn) for kn in _knm_pairs(8)}
    bad = []
    for (k, n), d in dists.items():
        if not check_monotone(d.Rfun, *_prange(cfg), **kw).is_increasing:
            bad.append(("R", k, n))
        if not check_monotone(d.pRpR, *_prange(cfg), **kw).is_decreasing:
            bad.append(("pR'/R", k, n))
    case.check("R increasing and pR'/R decreasing for all pairs", not bad, str(bad[:5]))
    bad = []
    count = 0
    for (k, n) in _knm_pairs(8):
        for (l, m) in _knm_pairs(8):
            if l <= k and (n - k) <= (m - l):
                count += 1
                ratio = lambda p, a=dists[(k, n)], b=dists[(l, m)]: a.Rfun(p) / b.Rfun(p)
                if not check_monotone(ratio, *_prange(cfg), **kw).is_increasing:
                    bad.append((k, n, l, m))
    case.check(
        f"R ratio increasing for all {count} admissible quadruples", not bad, str(bad[:5])
    )
    return case.done()


def _prange(cfg):
    eps = cfg.get("eps", DEFAULT_EPS)
    return (eps, 1.0 - eps)


def _mono_kw(cfg):
    return {
        "grid_points": cfg.get("grid", DEFAULT_GRID),
        "tol": cfg.get("tol", DEFAULT_TOL),
    }


def _cmp_kw(cfg):
    return {
        "eps": cfg.get("eps", DEFAULT_EPS),
        "grid_points": cfg.get("grid", DEFAULT_GRID),
        "tol": cfg.get("tol", DEFAULT_TOL),
    }


def _order_kw(cfg):
    return {
        "grid_points": cfg.get("grid", DEFAULT_GRID),
        "tol": cfg.get("tol", DEFAULT_TOL),
    }


def _verdict_kw(cfg):
    return _cmp_kw(cfg)


CASES = {
    "ex-1.1": _case_ex_1_1,
    "ex-3.1": _case_ex_3_1,
    "ce-3.1": _case_ce_3_1,
    "ce-3.2": _case_ce_3_2,
    "ex-5.1": _case_ex_5_1,
    "ex-4.1": _case_ex_4_1,
    "cor-4.1": _case_cor_4_1,
    "cor-5.1": _case_cor_5_1,
    "cor-5.2": _case_cor_5_2,
    "lemma-2.3": _case_lemma_2_3,
    "lemma-2.4": _case_lemma_2_4,
}


class UnknownCase(RelageError):
    pass


def reproduce(case_id: str, cfg: dict | None = None) -> dict:
    """Run a registry case; returns its report with assertion counts."""
    if case_id not in CASES:
        raise UnknownCase(f"unknown case id {case_id!r}; known: {sorted(CASES)}")
    return CASES[case_id](cfg or {})
