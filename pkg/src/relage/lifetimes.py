"""Parametric lifetime marginals and distorted system lifetimes.

Marginals expose survival, distribution, density, hazard and reversed
hazard evaluators plus log-domain variants used to keep order-ratio
computations stable in the tails. Composing a marginal with a distortion h
yields the system model: survival h(F-bar), hazard r(x) H(F-bar(x)),
reversed hazard r-tilde(x) R(F-bar(x)).

Residual constructions compare a system of used components, whose survival
is h(F-bar(t+x)/F-bar(t)), with a used system, whose survival is
h(F-bar(t+x))/h(F-bar(t)); both carry analytic hazard and reversed-hazard
evaluators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._util import DEFAULT_EPS
from .distortion import Distortion
from .errors import BadParameter, DeadAtT, NonpositiveX


@dataclass(frozen=True)
class LifetimeModel:
    """Nonnegative lifetime with closed-form evaluators on (0, inf).

    ``window`` is the x-range on which the survival function spans
    [eps, 1-eps] (eps = 1e-4 by default); ratio checks default to it.
    ``quantile_sf`` inverts the survival function where available.
    """

    sf: Callable[[np.ndarray], np.ndarray]
    cdf: Callable[[np.ndarray], np.ndarray]
    pdf: Callable[[np.ndarray], np.ndarray]
    hazard: Callable[[np.ndarray], np.ndarray]
    rev_hazard: Callable[[np.ndarray], np.ndarray]
    window: tuple[float, float]
    label: str = "lifetime"
    log_sf: Callable[[np.ndarray], np.ndarray] | None = None
    log_cdf: Callable[[np.ndarray], np.ndarray] | None = None
    quantile_sf: Callable[[float], float] | None = None

    def at(self, x: float) -> dict[str, float]:
        """Point evaluation of all five functions."""
        arr = np.asarray(x, dtype=float)
        return {
            "F": float(self.cdf(arr)),
            "sf": float(self.sf(arr)),
            "pdf": float(self.pdf(arr)),
            "hazard": float(self.hazard(arr)),
            "rev_hazard": float(self.rev_hazard(arr)),
        }


def _positive(x):
    arr = np.asarray(x, dtype=float)
    if np.any(arr <= 0.0):
        raise NonpositiveX(f"lifetime evaluators need x > 0, got {arr.min()}")
    return arr


def weibull(rate: float, shape: float, eps: float = DEFAULT_EPS) -> LifetimeModel:
    """Weibull with survival exp(-rate * x^shape)."""
    if rate <= 0 or shape <= 0:
        raise BadParameter(f"weibull needs rate > 0 and shape > 0, got {rate}, {shape}")
    lam, kap = float(rate), float(shape)

    def log_sf(x):
        return -lam * _positive(x) ** kap

    def sf(x):
        return np.exp(log_sf(x))

    def cdf(x):
        return -np.expm1(log_sf(x))

    def hazard(x):
        return lam * kap * _positive(x) ** (kap - 1.0)

    def pdf(x):
        return hazard(x) * sf(x)

    def rev_hazard(x):
        return hazard(x) * sf(x) / cdf(x)

    def log_cdf(x):
        return np.log(cdf(x))

    def quantile_sf(u: float) -> float:
        return (-math.log(u) / lam) ** (1.0 / kap)

    window = (quantile_sf(1.0 - eps), quantile_sf(eps))
    return LifetimeModel(
        sf=sf, cdf=cdf, pdf=pdf, hazard=hazard, rev_hazard=rev_hazard,
        window=window, label=f"weibull(rate={rate:g}, shape={shape:g})",
        log_sf=log_sf, log_cdf=log_cdf, quantile_sf=quantile_sf,
    )


def exponential(rate: float, eps: float = DEFAULT_EPS) -> LifetimeModel:
    m = weibull(rate, 1.0, eps)
    return LifetimeModel(
        sf=m.sf, cdf=m.cdf, pdf=m.pdf, hazard=m.hazard, rev_hazard=m.rev_hazard,
        window=m.window, label=f"exponential(rate={rate:g})",
        log_sf=m.log_sf, log_cdf=m.log_cdf, quantile_sf=m.quantile_sf,
    )


def frechet(scale: float, shape: float, eps: float = DEFAULT_EPS) -> LifetimeModel:
    """Frechet with distribution function exp(-(scale/x)^shape)."""
    if scale <= 0 or shape <= 0:
        raise BadParameter(f"frechet needs scale > 0 and shape > 0, got {scale}, {shape}")
    sig, kap = float(scale), float(shape)
    log_rh_const = math.log(kap) + kap * math.log(sig)

    def log_cdf(x):
        return -((sig / _positive(x)) ** kap)

    def cdf(x):
        return np.exp(log_cdf(x))

    def sf(x):
        return -np.expm1(log_cdf(x))

    def rev_hazard(x):
        # log-domain guards against overflow of x^(-shape-1) at small x
        return np.exp(log_rh_const - (kap + 1.0) * np.log(_positive(x)))

    def pdf(x):
        return rev_hazard(x) * cdf(x)

    def hazard(x):
        return pdf(x) / sf(x)

    def log_sf(x):
        return np.log(sf(x))

    def quantile_sf(u: float) -> float:
        return sig * (-math.log1p(-u)) ** (-1.0 / kap)

    window = (quantile_sf(1.0 - eps), quantile_sf(eps))
    return LifetimeModel(
        sf=sf, cdf=cdf, pdf=pdf, hazard=hazard, rev_hazard=rev_hazard,
        window=window, label=f"frechet(scale={scale:g}, shape={shape:g})",
        log_sf=log_sf, log_cdf=log_cdf, quantile_sf=quantile_sf,
    )


_FAMILIES = {
    "weibull": lambda spec: weibull(spec["rate"], spec["shape"]),
    "exponential": lambda spec: exponential(spec["rate"]),
    "frechet": lambda spec: frechet(spec["scale"], spec["shape"]),
}


def marginal_from_spec(spec: dict) -> LifetimeModel:
    kind = spec.get("type")
    if kind not in _FAMILIES:
        raise BadParameter(f"unknown marginal family {kind!r}")
    try:
        return _FAMILIES[kind](spec)
    except KeyError as missing:
        raise BadParameter(f"marginal {kind!r} missing parameter {missing}") from None


def marginal_eval(spec: dict, x: float) -> dict[str, float]:
    """Closed-form {F, sf, pdf, hazard, rev_hazard} of a marginal at x > 0."""
    return marginal_from_spec(spec).at(_positive(x))


def system_lifetime(d: Distortion, marginal: LifetimeModel) -> LifetimeModel:
    """Lifetime of the system with distortion d on i.d. components ~ marginal.

    Functional evaluations are deliberately unclamped: deep-tail arguments
    (component survival below 1e-4) remain well defined through the stable
    g and s auxiliaries, and only true degeneracy (values under 1e-300)
    raises.
    """

    def sfx(x):
        return marginal.sf(x)

    def sf(x):
        return d(sfx(x))

    def cdf(x):
        return d.one_minus(sfx(x))

    def pdf(x):
        return marginal.pdf(x) * d.d1(sfx(x))

    def hazard(x):
        return marginal.hazard(x) * d.Hfun(sfx(x))

    def rev_hazard(x):
        return marginal.rev_hazard(x) * d.Rfun(sfx(x))

    def log_sf(x):
        return np.log(sf(x))

    def log_cdf(x):
        return np.log(cdf(x))

    if marginal.quantile_sf is not None:
        # window where the *system* survival spans [eps, 1-eps]
        eps = DEFAULT_EPS
        window = (
            marginal.quantile_sf(d.inverse(1.0 - eps)),
            marginal.quantile_sf(d.inverse(eps)),
        )
    else:
        window = marginal.window

    return LifetimeModel(
        sf=sf, cdf=cdf, pdf=pdf, hazard=hazard, rev_hazard=rev_hazard,
        window=window, label=f"{d.label} on {marginal.label}",
        log_sf=log_sf, log_cdf=log_cdf, quantile_sf=None,
    )


def residual_model(
    d: Distortion,
    marginal: LifetimeModel,
    t: float,
    kind: str,
) -> LifetimeModel:
    """Residual system at age t.

    kind="system_of_used": a fresh system built from components already aged
    t, survival h(F-bar(t+x)/F-bar(t)). kind="used_system": the system aged
    t as a whole, survival h(F-bar(t+x))/h(F-bar(t)).
    """
    if kind not in ("system_of_used", "used_system"):
        raise ValueError(f"kind must be 'system_of_used' or 'used_system', got {kind!r}")
    if t < 0:
        raise DeadAtT(f"age t must be >= 0, got {t}")
    t = float(t)
    sft = float(marginal.sf(np.asarray(t))) if t > 0 else 1.0
    if sft <= 1e-12:
        raise DeadAtT(f"component survival at t={t} is {sft}")
    hft = float(d(np.asarray(sft)))
    if hft <= 1e-12:
        raise DeadAtT(f"system survival at t={t} is {hft}")

    if marginal.quantile_sf is not None:
        # window where the residual system's own survival spans [eps, 1-eps]
        eps = DEFAULT_EPS
        if kind == "system_of_used":
            p_hi = d.inverse(1.0 - eps) * sft
            p_lo = d.inverse(eps) * sft
        else:
            p_hi = d.inverse((1.0 - eps) * hft)
            p_lo = d.inverse(eps * hft)
        x_hi = marginal.quantile_sf(p_lo) - t
        x_lo = max(marginal.quantile_sf(min(p_hi, sft * (1.0 - 1e-12))) - t,
                   1e-12 * x_hi)
    else:
        x_lo = max(marginal.window[0] - t, 1e-9)
        x_hi = max(marginal.window[1] - t, 2 * x_lo)
    window = (x_lo, x_hi)

    if kind == "system_of_used":

        def ratio(x):
            return marginal.sf(t + np.asarray(x, dtype=float)) / sft

        def sf(x):
            return d(ratio(x))

        def cdf(x):
            return d.one_minus(ratio(x))

        def pdf(x):
            return marginal.pdf(t + np.asarray(x, dtype=float)) * d.d1(ratio(x)) / sft

        def hazard(x):
            return marginal.hazard(t + np.asarray(x, dtype=float)) * d.Hfun(ratio(x))

        def rev_hazard(x):
            x = np.asarray(x, dtype=float)
            q = ratio(x)
            return marginal.pdf(t + x) * d.d1(q) / (sft * d.one_minus(q))

        label = f"system_of_used(t={t:g}) {d.label} on {marginal.label}"
    else:

        def inner(x):
            return marginal.sf(t + np.asarray(x, dtype=float))

        def sf(x):
            return d(inner(x)) / hft

        def cdf(x):
            return 1.0 - d(inner(x)) / hft

        def pdf(x):
            return marginal.pdf(t + np.asarray(x, dtype=float)) * d.d1(inner(x)) / hft

        def hazard(x):
            return marginal.hazard(t + np.asarray(x, dtype=float)) * d.Hfun(inner(x))

        def rev_hazard(x):
            x = np.asarray(x, dtype=float)
            q = inner(x)
            return marginal.pdf(t + x) * d.d1(q) / (hft - d(q))

        label = f"used_system(t={t:g}) {d.label} on {marginal.label}"

    def log_sf(x):
        return np.log(sf(x))

    def log_cdf(x):
        return np.log(cdf(x))

    return LifetimeModel(
        sf=sf, cdf=cdf, pdf=pdf, hazard=hazard, rev_hazard=rev_hazard,
        window=window, label=label, log_sf=log_sf, log_cdf=log_cdf,
        quantile_sf=None,
    )
