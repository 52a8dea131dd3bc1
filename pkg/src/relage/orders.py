"""Stochastic-order and relative-ageing checkers.

Positive ageing comparisons are decided by classifying defining ratios:

* hazard-rate order (hr): sf_B/sf_A increasing;
* reversed-hazard order (rhr): F_B/F_A increasing;
* ageing faster in hazard (afc): r_A/r_B increasing;
* ageing faster in reversed hazard (afb): rt_A/rt_B decreasing.

System-versus-system verdicts with a shared component marginal are
marginal-free: they only involve the distortion functionals H and R. The
redundancy and residual criteria are likewise expressed in the survival
level p and then cross-validated against explicitly constructed models,
raising InternalInconsistency on disagreement.

"increasing"/"decreasing" are non-strict throughout, so a ratio constant
within tolerance satisfies both directions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from ._util import DEFAULT_EPS, DEFAULT_GRID, DEFAULT_TOL, parallel_map
from .copulas import Generator
from .distortion import Distortion, transform_redundancy
from .errors import GeneratorNotDecreasing, InternalInconsistency, InvalidParameter
from .lifetimes import LifetimeModel, exponential, residual_model, system_lifetime
from .monotone import CONSTANT, NON_MONOTONE, MonotonicityVerdict, check_monotone

ORDERS = ("hr", "rhr", "afc", "afb")

FORWARD = "forward"
REVERSE = "reverse"
BOTH = "both"
NEITHER = "neither"

SUFFICIENT_HOLDS = "sufficient_holds"
SUFFICIENT_FAILS = "sufficient_fails"
IFF_HOLDS = "iff_holds"
IFF_FAILS_WITH_WITNESS = "iff_fails_with_witness"


@dataclass(frozen=True)
class OrderVerdict:
    """Two-sided verdict for one order; constant ratios hold both ways."""

    order: str
    holds_forward: bool
    holds_reverse: bool
    detail: MonotonicityVerdict

    @property
    def conclusion(self) -> str:
        if self.holds_forward and self.holds_reverse:
            return BOTH
        if self.holds_forward:
            return FORWARD
        if self.holds_reverse:
            return REVERSE
        return NEITHER

    def as_dict(self):
        return {
            "order": self.order,
            "holds_forward": self.holds_forward,
            "holds_reverse": self.holds_reverse,
            "conclusion": self.conclusion,
            "detail": self.detail.as_dict(),
        }


@dataclass
class ConditionEntry:
    name: str
    required: str
    holds: bool
    verdict: MonotonicityVerdict | None = None
    note: str = ""

    def as_dict(self):
        out = {"name": self.name, "required": self.required, "holds": self.holds}
        if self.verdict is not None:
            out["verdict"] = self.verdict.as_dict()
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class ConditionReport:
    """Outcome of an iff or sufficient-condition check.

    ``conclusion`` is one of forward/reverse/both/neither for iff criteria
    (direction of the order named by ``check``) and forward/None for
    sufficient ones.
    """

    check: str
    mode: str | None
    overall: str
    conclusion: str | None
    entries: list[ConditionEntry] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "check": self.check,
            "mode": self.mode,
            "overall": self.overall,
            "conclusion": self.conclusion,
            "conditions": [e.as_dict() for e in self.entries],
            "metadata": self.metadata,
        }


# ----------------------------------------------------------------------
# pairwise order checks on lifetime models
# ----------------------------------------------------------------------

def _ratio_fn(a: LifetimeModel, b: LifetimeModel, order: str) -> Callable:
    if order == "hr":
        if a.log_sf is not None and b.log_sf is not None:
            return lambda x: np.exp(b.log_sf(x) - a.log_sf(x))
        return lambda x: b.sf(x) / a.sf(x)
    if order == "rhr":
        if a.log_cdf is not None and b.log_cdf is not None:
            return lambda x: np.exp(b.log_cdf(x) - a.log_cdf(x))
        return lambda x: b.cdf(x) / a.cdf(x)
    if order == "afc":
        return lambda x: a.hazard(x) / b.hazard(x)
    if order == "afb":
        return lambda x: a.rev_hazard(x) / b.rev_hazard(x)
    raise InvalidParameter(f"unknown order {order!r}; expected one of {ORDERS}")


def check_order(
    a: LifetimeModel,
    b: LifetimeModel,
    order: str,
    *,
    x_range: tuple[float, float] | None = None,
    grid_points: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
) -> OrderVerdict:
    """Classify the defining ratio of an order between two lifetimes.

    forward means "a related to b" (a below b in hr/rhr, a ageing faster in
    afc/afb); reverse is the opposite direction. The grid is log-spaced on
    x_range, defaulting to the intersection of the two model windows.
    """
    ratio = _ratio_fn(a, b, order)
    if x_range is None:
        lo = max(a.window[0], b.window[0])
        hi = min(a.window[1], b.window[1])
        if not lo < hi:
            raise InvalidParameter(
                f"model windows {a.window} and {b.window} do not overlap"
            )
    else:
        lo, hi = x_range
    verdict = check_monotone(
        ratio, lo, hi, grid_points=grid_points, tol=tol, log_spaced=True
    )
    if order == "afb":
        forward, reverse = verdict.is_decreasing, verdict.is_increasing
    else:
        forward, reverse = verdict.is_increasing, verdict.is_decreasing
    return OrderVerdict(order, forward, reverse, verdict)


# ----------------------------------------------------------------------
# marginal-free system comparison (shared component distribution)
# ----------------------------------------------------------------------

def _iff_report(check, mode, verdict, forward_class, meta=None) -> ConditionReport:
    """Map a ratio classification to an iff report.

    forward_class is the classification that certifies the forward
    direction ("decreasing" or "increasing"); the opposite certifies the
    reverse one, constant certifies both.
    """
    cls = verdict.classification
    if cls == CONSTANT:
        conclusion = BOTH
    elif cls == forward_class:
        conclusion = FORWARD
    elif cls == NON_MONOTONE:
        conclusion = NEITHER
    else:
        conclusion = REVERSE
    overall = IFF_FAILS_WITH_WITNESS if conclusion == NEITHER else IFF_HOLDS
    entry = ConditionEntry(
        name=f"{check} defining ratio",
        required=forward_class,
        holds=conclusion in (FORWARD, BOTH),
        verdict=verdict,
    )
    return ConditionReport(
        check=check,
        mode=mode,
        overall=overall,
        conclusion=conclusion,
        entries=[entry],
        metadata=meta or {},
    )


def compare_systems_exact(
    d1: Distortion,
    d2: Distortion,
    mode: str,
    *,
    eps: float = DEFAULT_EPS,
    grid_points: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
) -> ConditionReport:
    """Ageing-faster verdict for two systems on the same component lifetimes.

    mode "c": H1/H2 decreasing iff system 1 ages faster in hazard rate.
    mode "b": R1/R2 increasing iff system 1 ages faster in reversed hazard.
    The verdict does not depend on the (common) marginal.
    """
    if mode == "c":
        ratio = lambda p: d1.Hfun(p) / d2.Hfun(p)
        forward_class = "decreasing"
        name = "ageing-faster (hazard) of system 1 vs system 2"
    elif mode == "b":
        ratio = lambda p: d1.Rfun(p) / d2.Rfun(p)
        forward_class = "increasing"
        name = "ageing-faster (reversed hazard) of system 1 vs system 2"
    else:
        raise InvalidParameter(f"mode must be 'c' or 'b', got {mode!r}")
    verdict = check_monotone(ratio, eps, 1.0 - eps, grid_points=grid_points, tol=tol)
    return _iff_report(
        name, mode, verdict, forward_class,
        meta={"d1": d1.label, "d2": d2.label, "eps": eps},
    )


# ----------------------------------------------------------------------
# sufficient conditions with distinct component marginals
# ----------------------------------------------------------------------

def check_sufficient_conditions(
    d1: Distortion,
    d2: Distortion,
    x_model: LifetimeModel,
    y_model: LifetimeModel,
    mode: str,
    *,
    eps: float = DEFAULT_EPS,
    grid_points: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
) -> ConditionReport:
    """Sufficient conditions for system 1 on X to age faster than system 2 on Y.

    mode "c" (hazard): (i) H1 and H1/H2 decreasing; (ii) (1-p)H1'/H1 or
    (1-p)H2'/H2 decreasing; (iii) X ages faster than Y in hazard and Y is
    below X in reversed hazard. mode "b" swaps in the R functionals, the
    reversed-hazard ageing and the hr ordering of X below Y.

    When every hypothesis holds, the implied conclusion is verified against
    the explicitly built system models; disagreement raises
    InternalInconsistency.
    """
    lo, hi = eps, 1.0 - eps
    mono = lambda f: check_monotone(f, lo, hi, grid_points=grid_points, tol=tol)
    entries: list[ConditionEntry] = []

    if mode == "c":
        v = mono(d1.Hfun)
        entries.append(ConditionEntry("(i) H1 decreasing", "decreasing", v.is_decreasing, v))
        v = mono(lambda p: d1.Hfun(p) / d2.Hfun(p))
        entries.append(ConditionEntry("(i) H1/H2 decreasing", "decreasing", v.is_decreasing, v))
        va = mono(d1.one_minus_pHpH)
        vb = mono(d2.one_minus_pHpH)
        entries.append(ConditionEntry(
            "(ii) (1-p) H1'/H1 decreasing", "decreasing", va.is_decreasing, va,
            note="either alternative of (ii) suffices",
        ))
        entries.append(ConditionEntry(
            "(ii) (1-p) H2'/H2 decreasing", "decreasing", vb.is_decreasing, vb,
            note="either alternative of (ii) suffices",
        ))
        ii_holds = va.is_decreasing or vb.is_decreasing
        ov = check_order(x_model, y_model, "afc", grid_points=grid_points, tol=tol)
        entries.append(ConditionEntry(
            "(iii) X ages faster than Y in hazard", "increasing hazard ratio",
            ov.holds_forward, ov.detail,
        ))
        rv = check_order(y_model, x_model, "rhr", grid_points=grid_points, tol=tol)
        entries.append(ConditionEntry(
            "(iii) Y below X in reversed-hazard order", "increasing F_X/F_Y",
            rv.holds_forward, rv.detail,
        ))
        hypotheses = (
            entries[0].holds and entries[1].holds and ii_holds
            and entries[4].holds and entries[5].holds
        )
        conclusion_order = "afc"
    elif mode == "b":
        v = mono(d1.Rfun)
        entries.append(ConditionEntry("(i) R1 increasing", "increasing", v.is_increasing, v))
        v = mono(lambda p: d1.Rfun(p) / d2.Rfun(p))
        entries.append(ConditionEntry("(i) R1/R2 increasing", "increasing", v.is_increasing, v))
        va = mono(d1.pRpR)
        vb = mono(d2.pRpR)
        entries.append(ConditionEntry(
            "(ii) p R1'/R1 decreasing", "decreasing", va.is_decreasing, va,
            note="either alternative of (ii) suffices",
        ))
        entries.append(ConditionEntry(
            "(ii) p R2'/R2 decreasing", "decreasing", vb.is_decreasing, vb,
            note="either alternative of (ii) suffices",
        ))
        ii_holds = va.is_decreasing or vb.is_decreasing
        ov = check_order(x_model, y_model, "afb", grid_points=grid_points, tol=tol)
        entries.append(ConditionEntry(
            "(iii) X ages faster than Y in reversed hazard",
            "decreasing reversed-hazard ratio", ov.holds_forward, ov.detail,
        ))
        hv = check_order(x_model, y_model, "hr", grid_points=grid_points, tol=tol)
        entries.append(ConditionEntry(
            "(iii) X below Y in hazard-rate order", "increasing sf_Y/sf_X",
            hv.holds_forward, hv.detail,
        ))
        hypotheses = (
            entries[0].holds and entries[1].holds and ii_holds
            and entries[4].holds and entries[5].holds
        )
        conclusion_order = "afb"
    else:
        raise InvalidParameter(f"mode must be 'c' or 'b', got {mode!r}")

    meta = {"d1": d1.label, "d2": d2.label, "X": x_model.label, "Y": y_model.label}
    if not hypotheses:
        return ConditionReport(
            check="sufficient conditions for system ageing-faster order",
            mode=mode, overall=SUFFICIENT_FAILS, conclusion=None,
            entries=entries, metadata=meta,
        )

    tau1 = system_lifetime(d1, x_model)
    tau2 = system_lifetime(d2, y_model)
    cv = check_order(tau1, tau2, conclusion_order, grid_points=grid_points, tol=tol)
    if not cv.holds_forward:
        raise InternalInconsistency(
            "hypotheses hold but the system-level conclusion fails: "
            f"{cv.detail.classification}"
        )
    entries.append(ConditionEntry(
        "conclusion verified on explicit system models", "holds", True, cv.detail,
    ))
    return ConditionReport(
        check="sufficient conditions for system ageing-faster order",
        mode=mode, overall=SUFFICIENT_HOLDS, conclusion=FORWARD,
        entries=entries, metadata=meta,
    )


# ----------------------------------------------------------------------
# redundancy placement: system level vs component level
# ----------------------------------------------------------------------

def _claims_consistent(conclusion: str, ov: OrderVerdict) -> bool:
    if conclusion == FORWARD:
        return ov.holds_forward
    if conclusion == REVERSE:
        return ov.holds_reverse
    if conclusion == BOTH:
        return ov.holds_forward and ov.holds_reverse
    return not (ov.holds_forward or ov.holds_reverse)


def redundancy_verdict(
    d: Distortion,
    m: int,
    mode: str,
    method: str = "iff",
    *,
    eps: float = DEFAULT_EPS,
    grid_points: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    cross_validate: bool = True,
) -> ConditionReport:
    """Does system-level redundancy age faster than component-level?

    forward = the replicated system (T_S) ages faster than the system of
    replicated components (T_C). mode "c" admits only the iff criterion; the
    defining expression is the hazard ratio r_{T_S}/r_{T_C} rewritten in
    the survival level p, decreasing iff forward. mode "b" offers the iff
    criterion R(p)/R(1-(1-p)^{m+1}) increasing iff forward, and the
    m-free sufficient criterion "p R'/R decreasing and positive".
    """
    if mode not in ("c", "b"):
        raise InvalidParameter(f"mode must be 'c' or 'b', got {mode!r}")
    if method not in ("iff", "sufficient"):
        raise InvalidParameter(f"method must be 'iff' or 'sufficient', got {method!r}")
    if mode == "c" and method == "sufficient":
        raise InvalidParameter("mode 'c' supports only the iff criterion")
    if int(m) != m or m < 1:
        raise InvalidParameter(f"m must be a positive integer, got {m}")
    m = int(m)
    lo, hi = eps, 1.0 - eps
    meta = {"d": d.label, "m": m, "eps": eps}

    def r_at_one_minus(w):
        # R(1 - w) evaluated without forming 1 - w
        return w * d.d1_c(w) / d.one_minus_c(w)

    if mode == "c":

        def km_expr(p):
            p = np.asarray(p, dtype=float)
            h = d(p)
            om_h = d.one_minus(p)
            # log(1 - h) from whichever side is accurate
            log_om = np.empty_like(h)
            small = h <= 0.5
            log_om[small] = np.log1p(-h[small])
            log_om[~small] = np.log(om_h[~small])
            denom = -np.expm1((m + 1.0) * log_om)
            first = om_h**m * d.d1(p) / denom
            w = (1.0 - p) ** (m + 1)
            num = d.eval_c(w)  # h at 1-w
            den = (1.0 - p) ** m * d.d1_c(w)
            return first * num / den

        verdict = check_monotone(km_expr, lo, hi, grid_points=grid_points, tol=tol)
        report = _iff_report(
            "system-level vs component-level redundancy (hazard ageing)",
            mode, verdict, "decreasing", meta,
        )
    elif method == "iff":

        def rr_expr(p):
            p = np.asarray(p, dtype=float)
            w = (1.0 - p) ** (m + 1)
            return d.Rfun(p) / r_at_one_minus(w)

        verdict = check_monotone(rr_expr, lo, hi, grid_points=grid_points, tol=tol)
        report = _iff_report(
            "system-level vs component-level redundancy (reversed-hazard ageing)",
            mode, verdict, "increasing", meta,
        )
    else:
        verdict = check_monotone(d.pRpR, lo, hi, grid_points=grid_points, tol=tol)
        values = d.pRpR(np.linspace(lo, hi, grid_points))
        positive = bool(np.all(values >= -max(tol, 1e-12)))
        entries = [
            ConditionEntry("p R'/R decreasing", "decreasing", verdict.is_decreasing, verdict),
            ConditionEntry(
                "p R'/R positive", "nonnegative", positive,
                note=f"min value {float(values.min()):.3e}",
            ),
        ]
        holds = verdict.is_decreasing and positive
        report = ConditionReport(
            check="system-level vs component-level redundancy (reversed-hazard ageing)",
            mode=mode,
            overall=SUFFICIENT_HOLDS if holds else SUFFICIENT_FAILS,
            conclusion=FORWARD if holds else None,
            entries=entries,
            metadata=meta,
        )

    if cross_validate and report.conclusion is not None:
        marg = exponential(1.0)
        t_s = system_lifetime(transform_redundancy(d, "system", m), marg)
        t_c = system_lifetime(transform_redundancy(d, "component", m), marg)
        order = "afc" if mode == "c" else "afb"
        ov = check_order(t_s, t_c, order, grid_points=grid_points, tol=tol)
        if not _claims_consistent(report.conclusion, ov):
            raise InternalInconsistency(
                f"redundancy criterion says {report.conclusion!r} but explicit "
                f"models give {ov.conclusion!r}"
            )
        report.metadata["cross_validated"] = ov.conclusion
    return report


# ----------------------------------------------------------------------
# used system vs system of used components
# ----------------------------------------------------------------------

def residual_verdict(
    d: Distortion,
    mode: str,
    method: str = "iff",
    *,
    eps: float = DEFAULT_EPS,
    grid_points: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    q_points: int = 50,
    cross_validate: bool = True,
    t_samples: tuple[float, ...] = (0.25, 1.0, 2.5),
) -> ConditionReport:
    """Does a system of used components age faster than the used system?

    forward = for every age t, the system built from used components ages
    faster than the system used as a whole. mode "c": iff criterion
    "p H'/H decreasing", sufficient criterion "(1-p) H'/H decreasing and
    negative". mode "b": iff criterion only, requiring for every q in (0,1)
    that [h'(p/q)/h'(p)] [(h(q)-h(p))/(1-h(p/q))] is increasing in p on
    (0, q); the q sweep is grid-certified, not symbolic.
    """
    if mode not in ("c", "b"):
        raise InvalidParameter(f"mode must be 'c' or 'b', got {mode!r}")
    if method not in ("iff", "sufficient"):
        raise InvalidParameter(f"method must be 'iff' or 'sufficient', got {method!r}")
    if mode == "b" and method == "sufficient":
        raise InvalidParameter("mode 'b' offers only the iff criterion")
    lo, hi = eps, 1.0 - eps
    meta = {"d": d.label, "eps": eps}

    if mode == "c" and method == "iff":
        verdict = check_monotone(d.pHpH, lo, hi, grid_points=grid_points, tol=tol)
        report = _iff_report(
            "system of used components vs used system (hazard ageing)",
            mode, verdict, "decreasing", meta,
        )
    elif mode == "c":
        verdict = check_monotone(d.one_minus_pHpH, lo, hi, grid_points=grid_points, tol=tol)
        values = d.one_minus_pHpH(np.linspace(lo, hi, grid_points))
        negative = bool(np.all(values <= max(tol, 1e-12)))
        entries = [
            ConditionEntry("(1-p) H'/H decreasing", "decreasing", verdict.is_decreasing, verdict),
            ConditionEntry(
                "(1-p) H'/H negative", "nonpositive", negative,
                note=f"max value {float(values.max()):.3e}",
            ),
        ]
        holds = verdict.is_decreasing and negative
        report = ConditionReport(
            check="system of used components vs used system (hazard ageing)",
            mode=mode,
            overall=SUFFICIENT_HOLDS if holds else SUFFICIENT_FAILS,
            conclusion=FORWARD if holds else None,
            entries=entries,
            metadata=meta,
        )
    else:
        qs = np.linspace(0.02, 0.98, q_points)

        def classify_q(q):
            def expr(p):
                p = np.asarray(p, dtype=float)
                r = p / q
                return (d.d1(r) / d.d1(p)) * (
                    (d.one_minus(p) - d.one_minus(q)) / d.one_minus(r)
                )

            return check_monotone(
                expr, eps, q - eps, grid_points=max(grid_points // 4, 201), tol=tol
            )

        verdicts = parallel_map(classify_q, list(qs))
        all_inc = all(v.is_increasing for v in verdicts)
        all_dec = all(v.is_decreasing for v in verdicts)
        offending = [
            float(q)
            for q, v in zip(qs, verdicts)
            if not (v.is_increasing or v.is_decreasing)
        ]
        if all_inc and all_dec:
            conclusion = BOTH
        elif all_inc:
            conclusion = FORWARD
        elif all_dec:
            conclusion = REVERSE
        else:
            conclusion = NEITHER
        worst = min(verdicts, key=lambda v: 1 if v.is_increasing else 0)
        entries = [ConditionEntry(
            f"two-level ratio increasing in p on (0, q) for all {q_points} q values",
            "increasing", conclusion in (FORWARD, BOTH), worst,
            note=f"offending q: {offending[:5]}" if offending else "",
        )]
        report = ConditionReport(
            check="system of used components vs used system (reversed-hazard ageing)",
            mode=mode,
            overall=IFF_HOLDS if conclusion != NEITHER else IFF_FAILS_WITH_WITNESS,
            conclusion=conclusion,
            entries=entries,
            metadata={**meta, "q_grid": f"{q_points} points on (0.02, 0.98)"},
        )

    if cross_validate and report.conclusion is not None:
        marg = exponential(1.0)
        order = "afc" if mode == "c" else "afb"
        for t in t_samples:
            fresh_of_used = residual_model(d, marg, t, "system_of_used")
            used_sys = residual_model(d, marg, t, "used_system")
            ov = check_order(fresh_of_used, used_sys, order, grid_points=grid_points, tol=tol)
            if not _claims_consistent(report.conclusion, ov):
                raise InternalInconsistency(
                    f"residual criterion says {report.conclusion!r} but explicit "
                    f"models at t={t} give {ov.conclusion!r}"
                )
        report.metadata["cross_validated_t"] = list(t_samples)
    return report


# ----------------------------------------------------------------------
# Archimedean generator conditions
# ----------------------------------------------------------------------

_GENERATOR_VARIANTS = ("hazard-series", "hazard-parallel", "rhr")


def generator_condition(
    gen: Generator,
    variant: str,
    *,
    x_min: float = 1e-3,
    grid_points: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
) -> ConditionReport:
    """Monotonicity of the generator condition for size-ordered chains.

    The classified function is x d/dx log(-psi'(x)/(1-psi(x))) for the
    hazard variants and x d/dx log(-psi'(x)/psi(x)) for the reversed-hazard
    variant, on [x_min, x_max] with psi(x_max) <= 1e-6. The log-derivative
    is taken numerically (a symmetric difference in log x), so the verdict
    is grid-certified.

    Conclusions (non-strict, so a constant condition satisfies both
    branches only as a sufficient condition):
      hazard-series, decreasing: among series systems, smaller ages faster;
      hazard-parallel, decreasing: among parallel systems, larger ages
      faster; rhr, decreasing: larger series (and smaller parallel) systems
      age faster in reversed hazard; rhr, increasing: the opposite.
    """
    if variant not in _GENERATOR_VARIANTS:
        raise InvalidParameter(f"variant must be one of {_GENERATOR_VARIANTS}")
    gen.validate()

    x_max = 1.0
    for _ in range(80):
        if float(gen.psi(np.asarray(x_max))) <= 1e-6:
            break
        x_max *= 2.0
    else:
        raise GeneratorNotDecreasing("generator does not reach 1e-6 by x = 2^80")

    use_one_minus = variant.startswith("hazard")

    def neg_dpsi(x):
        if gen.d1 is not None:
            return -np.asarray(gen.d1(x), dtype=float)
        dlt = 1e-6 * x
        return -(np.asarray(gen.psi(x + dlt)) - np.asarray(gen.psi(x - dlt))) / (2 * dlt)

    def logfun(x):
        denom = 1.0 - np.asarray(gen.psi(x), dtype=float) if use_one_minus else np.asarray(gen.psi(x), dtype=float)
        return np.log(neg_dpsi(x)) - np.log(denom)

    delta = 1e-5

    def condition(x):
        # x * d/dx log(...) equals the symmetric difference in log x
        return (logfun(x * math.e**delta) - logfun(x * math.e**-delta)) / (2 * delta)

    verdict = check_monotone(
        condition, x_min, x_max, grid_points=grid_points, tol=max(tol, 1e-9),
        log_spaced=True,
    )
    meta = {
        "generator": gen.label,
        "variant": variant,
        "x_range": [x_min, x_max],
        "reading": "phi is taken as the decreasing generator psi",
    }
    if variant == "hazard-series":
        concl_dec = "among series systems the smaller ages faster in hazard rate"
        concl_inc = None
    elif variant == "hazard-parallel":
        concl_dec = "among parallel systems the larger ages faster in hazard rate"
        concl_inc = None
    else:
        concl_dec = (
            "larger series and smaller parallel systems age faster in reversed hazard"
        )
        concl_inc = (
            "smaller series and larger parallel systems age faster in reversed hazard"
        )

    conclusions = []
    if verdict.is_decreasing:
        conclusions.append(concl_dec)
    if verdict.is_increasing and concl_inc:
        conclusions.append(concl_inc)
    note = ""
    if verdict.classification == CONSTANT:
        note = (
            "condition constant: both branches hold non-strictly; the induced "
            "chains may still be strictly one-sided"
        )
    holds = bool(conclusions)
    entry = ConditionEntry(
        "generator condition monotone in the certifying direction",
        "decreasing" if concl_inc is None else "decreasing or increasing",
        holds, verdict, note=note,
    )
    return ConditionReport(
        check=f"Archimedean generator condition ({variant})",
        mode=None,
        overall=SUFFICIENT_HOLDS if holds else SUFFICIENT_FAILS,
        conclusion="; ".join(conclusions) if conclusions else None,
        entries=[entry],
        metadata=meta,
    )
