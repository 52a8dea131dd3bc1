"""Dual distortion functions of coherent systems and their functionals.

A distortion h maps the common component survival level p to the system
survival level h(p). It is assembled from the minimal path sets and the
survival copula by inclusion-exclusion; exchangeability reduces the copula
evaluations to diagonal sections indexed by union size, so a structure with
r path sets costs 2^r integer operations once and n analytic terms per
evaluation afterwards.

Three backings are used:

* exact polynomials (independence, FGM, k-out-of-n with n <= 30) carrying
  Fraction coefficients in both the p and the (1-p) bases, so values,
  derivatives and complements are evaluated without cancellation at either
  end of the unit interval;
* power sums (Gumbel-Hougaard systems reduce to sums of real powers of p)
  with analytic derivatives and expm1-based complements;
* plain callables (Clayton-Oakes, generic Archimedean, compositions that
  leave the two classes above), with closed-form derivatives where the
  family provides them and guarded central differences otherwise.

The hazard-rate multiplier H(p) = p h'(p)/h(p) and the reversed-hazard
multiplier R(p) = (1-p) h'(p)/(1-h(p)) are computed through the stable
auxiliaries g = h/p and s = (1-h)/(1-p), which stay bounded and positive on
the whole interval for strictly increasing h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from numpy.polynomial import polynomial as npp
from scipy.special import betainc, gammaln

from ._util import DEFAULT_EPS
from .copulas import SurvivalCopula
from .errors import (
    BadThreshold,
    BoundaryEvaluation,
    DegenerateDistortion,
    DimensionMismatch,
    InvalidCopula,
    PathSetExplosion,
)
from .structures import StructureFunction

MAX_PATH_SETS = 20
POLY_DEGREE_CAP = 30


# ----------------------------------------------------------------------
# exact Fraction polynomial helpers (ascending coefficients)
# ----------------------------------------------------------------------

def _trim(c: list[Fraction]) -> list[Fraction]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _padd(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return _trim(out)


def _pscale(a, k):
    k = Fraction(k)
    return _trim([k * v for v in a])


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u == 0:
            continue
        for j, v in enumerate(b):
            out[i + j] += u * v
    return _trim(out)


def _ppow(a, m: int):
    out = [Fraction(1)]
    for _ in range(m):
        out = _pmul(out, a)
    return out


def _pcompose(a, b):
    """a(b(x)) by Horner."""
    out = [Fraction(0)]
    for coeff in reversed(a):
        out = _padd(_pmul(out, b), [Fraction(coeff)])
    return out


def _pderiv(a):
    if len(a) <= 1:
        return [Fraction(0)]
    return [Fraction(i) * a[i] for i in range(1, len(a))]


def _pdiv_x(a):
    """a / x, requiring a[0] == 0."""
    if a[0] != 0:
        raise ValueError("polynomial not divisible by x")
    return _trim(list(a[1:])) if len(a) > 1 else [Fraction(0)]


def _pfloat(a) -> np.ndarray:
    return np.array([float(v) for v in a], dtype=float)


_ONE_MINUS_X = [Fraction(1), Fraction(-1)]


def _shaped(method):
    """Normalize scalar/0-d inputs to 1-d and restore the shape on return."""

    def wrapper(self, p):
        arr = np.asarray(p, dtype=float)
        out = method(self, np.atleast_1d(arr))
        return out.reshape(arr.shape)

    wrapper.__name__ = method.__name__
    return wrapper


# ----------------------------------------------------------------------
# backings
# ----------------------------------------------------------------------

class _Backing:
    """Evaluation protocol shared by the three backings.

    Subclasses provide eval/d1/d2 and one_minus_c (the stable complement
    w -> 1 - h(1 - w)); the derived quantities below have generic
    implementations that stay accurate because w = 1 - p is computed exactly
    for p >= 1/2.
    """

    kind = "callable"
    unstable_derivatives = False

    def eval(self, p):  # pragma: no cover - abstract
        raise NotImplementedError

    def d1(self, p):  # pragma: no cover - abstract
        raise NotImplementedError

    def d2(self, p):  # pragma: no cover - abstract
        raise NotImplementedError

    def one_minus_c(self, w):  # pragma: no cover - abstract
        raise NotImplementedError

    def one_minus(self, p):
        return self.one_minus_c(1.0 - np.asarray(p, dtype=float))

    def d1_c(self, w):
        """h'(1 - w); overridden where 1 - w would lose precision."""
        return self.d1(1.0 - np.asarray(w, dtype=float))

    def eval_c(self, w):
        """h(1 - w), accurate on both sides of w = 1/2."""
        arr = np.asarray(w, dtype=float)
        w1 = np.atleast_1d(arr)
        out = np.empty_like(w1)
        sm = w1 <= 0.5
        if sm.any():
            out[sm] = 1.0 - self.one_minus_c(w1[sm])
        if (~sm).any():
            out[~sm] = self.eval(1.0 - w1[~sm])
        return out.reshape(arr.shape)

    def g(self, p):
        p = np.asarray(p, dtype=float)
        return self.eval(p) / p

    def g1(self, p):
        p = np.asarray(p, dtype=float)
        return (self.d1(p) - self.g(p)) / p

    def s(self, p):
        w = 1.0 - np.asarray(p, dtype=float)
        return self.one_minus_c(w) / w

    def s1(self, p):
        p = np.asarray(p, dtype=float)
        return (self.s(p) - self.d1(p)) / (1.0 - p)


class PolyBacking(_Backing):
    """Exact polynomial with dual-basis float evaluation.

    Coefficients are Fractions; h(0) = 0 and h(1) = 1 must hold exactly.
    Values and derivatives are read from the p basis below 1/2 and from the
    complement c(w) = 1 - h(1 - w) in the w basis above, so neither end of
    [0, 1] suffers cancellation.
    """

    kind = "polynomial"

    def __init__(self, coeffs: Sequence[Fraction | int]):
        cp = _trim([Fraction(c) for c in coeffs])
        if cp[0] != 0 or sum(cp) != 1:
            raise ValueError("distortion polynomial must satisfy h(0)=0, h(1)=1")
        self.coeffs = tuple(cp)
        cw = _padd([Fraction(1)], _pscale(_pcompose(cp, _ONE_MINUS_X), -1))
        gp = _pdiv_x(list(cp))
        sw = _pdiv_x(list(cw))
        omp = _padd([Fraction(1)], _pscale(list(cp), -1))
        self._fp = _pfloat(cp)
        self._fp1 = _pfloat(_pderiv(cp))
        self._fp2 = _pfloat(_pderiv(_pderiv(cp)))
        self._fw = _pfloat(cw)
        self._fw1 = _pfloat(_pderiv(cw))
        self._fw2 = _pfloat(_pderiv(_pderiv(cw)))
        self._fg = _pfloat(gp)
        self._fg1 = _pfloat(_pderiv(gp))
        self._fsw = _pfloat(sw)
        self._fsw1 = _pfloat(_pderiv(sw))
        self._fomp = _pfloat(omp)

    def _dual(self, p, lo_coeffs, hi_fn):
        out = np.empty_like(p)
        lo = p <= 0.5
        if lo.any():
            out[lo] = npp.polyval(p[lo], lo_coeffs)
        if (~lo).any():
            out[~lo] = hi_fn(1.0 - p[~lo])
        return out

    @_shaped
    def eval(self, p):
        return self._dual(p, self._fp, lambda w: 1.0 - npp.polyval(w, self._fw))

    @_shaped
    def d1(self, p):
        return self._dual(p, self._fp1, lambda w: npp.polyval(w, self._fw1))

    @_shaped
    def d2(self, p):
        return self._dual(p, self._fp2, lambda w: -npp.polyval(w, self._fw2))

    @_shaped
    def one_minus(self, p):
        return self._dual(p, self._fomp, lambda w: npp.polyval(w, self._fw))

    @_shaped
    def one_minus_c(self, w):
        out = np.empty_like(w)
        lo = w <= 0.5
        if lo.any():
            out[lo] = npp.polyval(w[lo], self._fw)
        if (~lo).any():
            out[~lo] = npp.polyval(1.0 - w[~lo], self._fomp)
        return out

    @_shaped
    def d1_c(self, w):
        out = np.empty_like(w)
        lo = w <= 0.5
        if lo.any():
            out[lo] = npp.polyval(w[lo], self._fw1)
        if (~lo).any():
            out[~lo] = npp.polyval(1.0 - w[~lo], self._fp1)
        return out

    @_shaped
    def g(self, p):
        return self._dual(
            p, self._fg, lambda w: (1.0 - npp.polyval(w, self._fw)) / (1.0 - w)
        )

    @_shaped
    def g1(self, p):
        out = np.empty_like(p)
        lo = p <= 0.5
        if lo.any():
            out[lo] = npp.polyval(p[lo], self._fg1)
        if (~lo).any():
            ph = p[~lo]
            out[~lo] = (self.d1(ph) - self.g(ph)) / ph
        return out

    @_shaped
    def s(self, p):
        out = np.empty_like(p)
        hi = p > 0.5
        if hi.any():
            out[hi] = npp.polyval(1.0 - p[hi], self._fsw)
        if (~hi).any():
            pl = p[~hi]
            out[~hi] = npp.polyval(pl, self._fomp) / (1.0 - pl)
        return out

    @_shaped
    def s1(self, p):
        out = np.empty_like(p)
        hi = p > 0.5
        if hi.any():
            out[hi] = -npp.polyval(1.0 - p[hi], self._fsw1)
        if (~hi).any():
            pl = p[~hi]
            out[~hi] = (self.s(pl) - self.d1(pl)) / (1.0 - pl)
        return out


class PowerSumBacking(_Backing):
    """h(p) = sum c_i p^{e_i} with real exponents e_i >= 1 and h(1) = 1."""

    kind = "power_sum"

    def __init__(self, terms: Sequence[tuple[float, float]]):
        merged: dict[float, float] = {}
        for c, e in terms:
            if c == 0.0:
                continue
            merged[e] = merged.get(e, 0.0) + c
        items = sorted((e, c) for e, c in merged.items() if c != 0.0)
        if not items or items[0][0] < 1.0:
            raise ValueError("power-sum distortion needs exponents >= 1")
        if abs(sum(c for _, c in items) - 1.0) > 1e-9:
            raise ValueError("power-sum distortion must satisfy h(1) = 1")
        self.exponents = np.array([e for e, _ in items])
        self.weights = np.array([c for _, c in items])

    def _powsum(self, p, shift, weights):
        e = self.exponents + shift
        with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
            mat = p[:, None] ** e
        mat = np.where(e == 0.0, 1.0, mat)
        return mat @ weights

    @_shaped
    def eval(self, p):
        return self._powsum(p, 0.0, self.weights)

    @_shaped
    def d1(self, p):
        return self._powsum(p, -1.0, self.weights * self.exponents)

    @_shaped
    def d2(self, p):
        w = self.weights * self.exponents * (self.exponents - 1.0)
        return self._powsum(p, -2.0, w)

    @_shaped
    def one_minus(self, p):
        with np.errstate(divide="ignore"):
            lp = np.log(p)
        return -np.expm1(self.exponents * lp[:, None]) @ self.weights

    @_shaped
    def one_minus_c(self, w):
        lp = np.log1p(-w)
        return -np.expm1(self.exponents * lp[:, None]) @ self.weights

    @_shaped
    def d1_c(self, w):
        lp = np.log1p(-w)
        return np.exp((self.exponents - 1.0) * lp[:, None]) @ (
            self.weights * self.exponents
        )

    @_shaped
    def g(self, p):
        return self._powsum(p, -1.0, self.weights)


class CallableBacking(_Backing):
    """Backing from plain callables with optional analytic derivatives.

    Missing derivatives fall back to central differences with step 1e-6
    (first order) and 1e-4 (second order), clipped into (0, 1). A
    construction-time probe flags derivative instability when halving the
    step moves the estimate by more than 1e-3 relatively.
    """

    kind = "callable"

    def __init__(self, fn, d1=None, d2=None, one_minus_c=None):
        self._fn = fn
        self._d1 = d1
        self._d2 = d2
        self._omc = one_minus_c
        self.unstable_derivatives = False
        if d1 is None:
            self.unstable_derivatives = self._probe_instability()

    def _probe_instability(self) -> bool:
        probes = np.array([0.1, 0.3, 0.5, 0.7, 0.9])
        a = self._central_d1(probes, 1e-6)
        b = self._central_d1(probes, 5e-7)
        scale = np.maximum(np.abs(a), 1e-12)
        return bool(np.any(np.abs(a - b) / scale > 1e-3))

    def _central_d1(self, p, step):
        dlt = np.minimum(step, np.minimum(p, 1.0 - p) / 2.0)
        return (self._fn(p + dlt) - self._fn(p - dlt)) / (2.0 * dlt)

    @_shaped
    def eval(self, p):
        return np.asarray(self._fn(p), dtype=float)

    @_shaped
    def d1(self, p):
        if self._d1 is not None:
            return np.asarray(self._d1(p), dtype=float)
        step = np.maximum(1e-6, 1e-6 * p * (1.0 - p))
        return self._central_d1(p, step)

    @_shaped
    def d2(self, p):
        if self._d2 is not None:
            return np.asarray(self._d2(p), dtype=float)
        if self._d1 is not None:
            dlt = np.minimum(1e-6, np.minimum(p, 1.0 - p) / 2.0)
            return (
                np.asarray(self._d1(p + dlt), dtype=float)
                - np.asarray(self._d1(p - dlt), dtype=float)
            ) / (2.0 * dlt)
        dlt = np.minimum(1e-4, np.minimum(p, 1.0 - p) / 2.0)
        return (self._fn(p + dlt) - 2.0 * self._fn(p) + self._fn(p - dlt)) / dlt**2

    @_shaped
    def one_minus_c(self, w):
        if self._omc is not None:
            return np.asarray(self._omc(w), dtype=float)
        return 1.0 - np.asarray(self._fn(1.0 - w), dtype=float)


# ----------------------------------------------------------------------
# the distortion facade
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FunctionalValues:
    """Distortion functionals at one or more survival levels.

    H = p h'/h is the hazard-rate multiplier and R = (1-p) h'/(1-h) the
    reversed-hazard multiplier. pHpH, one_minus_p_HpH and pRpR are the
    elasticity-style ratios p H'/H, (1-p) H'/H and p R'/R that drive the
    monotone criteria.
    """

    h: np.ndarray
    h_prime: np.ndarray
    H: np.ndarray
    R: np.ndarray
    pHpH: np.ndarray
    one_minus_p_HpH: np.ndarray
    pRpR: np.ndarray


class Distortion:
    """Immutable evaluable distortion with derivative and complement access."""

    def __init__(self, backing: _Backing, label: str = "distortion"):
        self.backing = backing
        self.label = label
        self._validate()

    def _validate(self):
        lo, hi = 1e-8, 1.0 - 1e-8
        v0 = float(self.backing.eval(lo))
        v1 = float(self.backing.eval(hi))
        if not (abs(v0) <= 1e-6 and abs(v1 - 1.0) <= 1e-6):
            raise DegenerateDistortion(
                f"{self.label}: h(0+)={v0}, h(1-)={v1}; expected 0 and 1"
            )
        grid = np.linspace(1e-6, 1.0 - 1e-6, 2001)
        vals = self.backing.eval(grid)
        if not np.all(np.isfinite(vals)):
            raise DegenerateDistortion(f"{self.label}: non-finite values on grid")
        if np.any(np.diff(vals) < -1e-12):
            raise DegenerateDistortion(f"{self.label}: not nondecreasing on grid")

    # ------------------------------------------------------------ primitives

    def __call__(self, p):
        return self.backing.eval(p)

    def d1(self, p):
        return self.backing.d1(p)

    def d2(self, p):
        return self.backing.d2(p)

    def one_minus(self, p):
        return self.backing.one_minus(p)

    def one_minus_c(self, w):
        """1 - h(1 - w), accurate for small w."""
        return self.backing.one_minus_c(w)

    def d1_c(self, w):
        """h'(1 - w), accurate for small w."""
        return self.backing.d1_c(w)

    def eval_c(self, w):
        """h(1 - w), accurate for w near either end."""
        return self.backing.eval_c(w)

    def inverse(self, y: float, tol: float = 1e-14) -> float:
        """Solve h(p) = y on [0, 1] by bisection (h is nondecreasing)."""
        if not 0.0 <= y <= 1.0:
            raise BoundaryEvaluation(f"target {y} outside [0, 1]")
        lo, hi = 0.0, 1.0
        for _ in range(200):
            mid = 0.5 * (lo + hi)
            if float(self.backing.eval(mid)) < y:
                lo = mid
            else:
                hi = mid
            if hi - lo < tol:
                break
        return 0.5 * (lo + hi)

    @property
    def backing_kind(self) -> str:
        return self.backing.kind

    @property
    def poly_coefficients(self) -> list[float] | None:
        if isinstance(self.backing, PolyBacking):
            return [float(c) for c in self.backing.coeffs]
        return None

    # ----------------------------------------------------------- functionals

    def Hfun(self, p):
        """Hazard-rate multiplier H(p) = p h'(p)/h(p)."""
        g = self.backing.g(p)
        self._guard(g, "h(p)/p")
        return self.backing.d1(p) / g

    def Rfun(self, p):
        """Reversed-hazard multiplier R(p) = (1-p) h'(p)/(1 - h(p))."""
        s = self.backing.s(p)
        self._guard(s, "(1-h(p))/(1-p)")
        return self.backing.d1(p) / s

    def H1fun(self, p):
        g, g1 = self.backing.g(p), self.backing.g1(p)
        self._guard(g, "h(p)/p")
        return (self.backing.d2(p) * g - self.backing.d1(p) * g1) / g**2

    def R1fun(self, p):
        s, s1 = self.backing.s(p), self.backing.s1(p)
        self._guard(s, "(1-h(p))/(1-p)")
        return (self.backing.d2(p) * s - self.backing.d1(p) * s1) / s**2

    def pHpH(self, p):
        p = np.asarray(p, dtype=float)
        g, g1, d1 = self.backing.g(p), self.backing.g1(p), self.backing.d1(p)
        self._guard(g * d1, "p h'(p) h(p)")
        return p * (self.backing.d2(p) * g - d1 * g1) / (g * d1)

    def one_minus_pHpH(self, p):
        p = np.asarray(p, dtype=float)
        g, g1, d1 = self.backing.g(p), self.backing.g1(p), self.backing.d1(p)
        self._guard(g * d1, "p h'(p) h(p)")
        return (1.0 - p) * (self.backing.d2(p) * g - d1 * g1) / (g * d1)

    def pRpR(self, p):
        p = np.asarray(p, dtype=float)
        s, s1, d1 = self.backing.s(p), self.backing.s1(p), self.backing.d1(p)
        self._guard(s * d1, "(1-h(p)) h'(p)")
        return p * (self.backing.d2(p) * s - d1 * s1) / (s * d1)

    @staticmethod
    def _guard(values, what: str):
        v = np.asarray(values)
        if np.any(np.abs(v) < 1e-300) or not np.all(np.isfinite(v)):
            raise DegenerateDistortion(f"degenerate {what} in functional evaluation")

    def __repr__(self):
        return f"Distortion({self.label!r}, backing={self.backing_kind})"


def eval_functionals(d: Distortion, p, eps: float | None = DEFAULT_EPS) -> FunctionalValues:
    """All functionals at p; p must lie in [eps, 1-eps] unless eps is None."""
    arr = np.asarray(p, dtype=float)
    if eps is not None and (np.any(arr < eps) or np.any(arr > 1.0 - eps)):
        raise BoundaryEvaluation(f"p outside [{eps}, {1.0 - eps}]")
    return FunctionalValues(
        h=d(arr),
        h_prime=d.d1(arr),
        H=d.Hfun(arr),
        R=d.Rfun(arr),
        pHpH=d.pHpH(arr),
        one_minus_p_HpH=d.one_minus_pHpH(arr),
        pRpR=d.pRpR(arr),
    )


# ----------------------------------------------------------------------
# constructors
# ----------------------------------------------------------------------

def _union_size_coefficients(phi: StructureFunction) -> list[int]:
    """Signed inclusion-exclusion counts grouped by path-set union size.

    System survival is sum_a coef[a] * K(p at a coords, 1 at the rest) for
    any exchangeable K. For k-out-of-n the counts come from the
    order-statistic identity P(at least k survive) =
    sum_s (-1)^{s-k} C(s-1,k-1) C(n,s) q_s, avoiding path-set enumeration.
    """
    n = phi.n
    coef = [0] * (n + 1)
    if phi.is_k_out_of_n:
        k = phi.k
        for s in range(k, n + 1):
            coef[s] = (-1) ** (s - k) * math.comb(s - 1, k - 1) * math.comb(n, s)
        return coef
    masks = [0] * len(phi.path_sets)
    for idx, ps in enumerate(phi.path_sets):
        for i in ps:
            masks[idx] |= 1 << (i - 1)
    r = len(masks)
    if r > MAX_PATH_SETS:
        raise PathSetExplosion(f"{r} path sets exceed the 2^{MAX_PATH_SETS} bound")
    unions = [0] * (1 << r)
    for s in range(1, 1 << r):
        low = (s & -s).bit_length() - 1
        unions[s] = unions[s & (s - 1)] | masks[low]
        sign = 1 if (s.bit_count() & 1) else -1
        coef[unions[s].bit_count()] += sign
    return coef


def _beta_jordan_coeffs(k: int, n: int) -> list[Fraction]:
    coef = [Fraction(0)] * (n + 1)
    for s in range(k, n + 1):
        coef[s] = Fraction((-1) ** (s - k) * math.comb(s - 1, k - 1) * math.comb(n, s))
    return coef


def distortion_k_out_of_n(k: int, n: int) -> Distortion:
    """Distortion of a k-out-of-n system with independent components.

    Exact polynomial (the regularized incomplete beta I_p(k, n-k+1)) for
    n <= 30; scipy's betainc beyond, with closed-form derivatives.
    """
    if not (isinstance(k, int) and isinstance(n, int) and 1 <= k <= n):
        raise BadThreshold(k, n)
    label = f"k_out_of_n_iid({k},{n})"
    if n <= POLY_DEGREE_CAP:
        return Distortion(PolyBacking(_beta_jordan_coeffs(k, n)), label)
    a, b = float(k), float(n - k + 1)
    lognorm = gammaln(a + b) - gammaln(a) - gammaln(b)

    def fn(p):
        return betainc(a, b, p)

    def d1(p):
        with np.errstate(divide="ignore"):
            return np.exp(lognorm + (a - 1.0) * np.log(p) + (b - 1.0) * np.log1p(-p))

    def d2(p):
        return d1(p) * ((a - 1.0) / p - (b - 1.0) / (1.0 - p))

    def omc(w):
        return betainc(b, a, w)

    return Distortion(CallableBacking(fn, d1=d1, d2=d2, one_minus_c=omc), label)


def build_distortion(phi: StructureFunction, copula: SurvivalCopula) -> Distortion:
    """Distortion of the system ``phi`` under the given survival copula."""
    if copula.n != phi.n:
        raise DimensionMismatch(
            f"copula dimension {copula.n} != structure size {phi.n}"
        )
    if phi.is_k_out_of_n and copula.family == "independence":
        d = distortion_k_out_of_n(phi.k, phi.n)
        return Distortion(d.backing, f"{phi.label} @ independence")

    coef = _union_size_coefficients(phi)
    n = phi.n
    label = f"{phi.label} @ {copula.family}" + (
        f"(theta={copula.theta:g})" if copula.theta is not None else ""
    )

    if copula.family == "independence":
        poly = [Fraction(0)] * (n + 1)
        for a, c in enumerate(coef):
            poly[a] += Fraction(c)
        return Distortion(PolyBacking(poly), label)

    if copula.family == "fgm":
        theta = Fraction(copula.theta)
        poly = [Fraction(0)] * (n + 1)
        for a, c in enumerate(coef):
            poly[a] += Fraction(c)
        if coef[n]:
            # K(p,..,p) = p^n (1 + theta (1-p)^n); the lower diagonal
            # sections coincide with independence because any coordinate at 1
            # kills the correction factor
            corr = _pscale(
                _pmul([Fraction(0)] * n + [Fraction(1)], _ppow(_ONE_MINUS_X, n)),
                theta * coef[n],
            )
            poly = _padd(poly, corr)
        return Distortion(PolyBacking(poly), label)

    if copula.family == "gumbel":
        inv_theta = 1.0 / copula.theta
        terms = [(float(c), float(a) ** inv_theta) for a, c in enumerate(coef) if c]
        return Distortion(PowerSumBacking(terms), label)

    if copula.family == "clayton":
        theta = float(copula.theta)
        pairs = [(float(c), float(a)) for a, c in enumerate(coef) if c]

        def base(p, a):
            return a * p ** (-theta) - (a - 1.0)

        def fn(p):
            acc = np.zeros_like(p)
            for c, a in pairs:
                acc += c * base(p, a) ** (-1.0 / theta)
            return acc

        def d1(p):
            acc = np.zeros_like(p)
            for c, a in pairs:
                acc += c * a * p ** (-theta - 1.0) * base(p, a) ** (-1.0 / theta - 1.0)
            return acc

        def d2(p):
            acc = np.zeros_like(p)
            for c, a in pairs:
                bb = base(p, a)
                t1 = a * (theta + 1.0) * p ** (-theta - 2.0) * bb ** (-1.0 / theta - 1.0)
                t2 = (
                    a**2
                    * (theta + 1.0)
                    * p ** (-2.0 * theta - 2.0)
                    * bb ** (-1.0 / theta - 2.0)
                )
                acc += c * (t2 - t1)
            return acc

        return Distortion(CallableBacking(fn, d1=d1, d2=d2), label)

    if copula.family == "archimedean":
        gen = copula.generator
        pairs = [(float(c), float(a)) for a, c in enumerate(coef) if c]

        def fn(p):
            t = np.asarray(gen.inverse(p), dtype=float)
            acc = np.zeros_like(t)
            for c, a in pairs:
                acc += c * gen.psi(a * t)
            return acc

        d1 = None
        d2 = None
        if gen.d1 is not None:

            def d1(p):
                t = np.asarray(gen.inverse(p), dtype=float)
                dpsi_t = gen.d1(t)
                acc = np.zeros_like(t)
                for c, a in pairs:
                    acc += c * a * gen.d1(a * t)
                return acc / dpsi_t

            if gen.d2 is not None:

                def d2(p):
                    t = np.asarray(gen.inverse(p), dtype=float)
                    u1 = gen.d1(t)
                    u2 = gen.d2(t)
                    acc = np.zeros_like(t)
                    for c, a in pairs:
                        acc += c * (a**2 * gen.d2(a * t) * u1 - a * gen.d1(a * t) * u2)
                    return acc / u1**3

        return Distortion(CallableBacking(fn, d1=d1, d2=d2), label)

    raise InvalidCopula(f"unsupported copula family {copula.family!r}")


def identity_distortion() -> Distortion:
    return Distortion(PolyBacking([Fraction(0), Fraction(1)]), "identity")


def power_distortion(a: float, label: str | None = None) -> Distortion:
    """h(p) = p^a for a >= 1 (series system under a Gumbel-Hougaard copula)."""
    if a == int(a) and a >= 1:
        coeffs = [Fraction(0)] * int(a) + [Fraction(1)]
        return Distortion(PolyBacking(coeffs), label or f"power({a:g})")
    return Distortion(PowerSumBacking([(1.0, float(a))]), label or f"power({a:g})")


def parallel_distortion(n: int) -> Distortion:
    return distortion_k_out_of_n(1, n)


def series_distortion(n: int) -> Distortion:
    return distortion_k_out_of_n(n, n)


def transform_redundancy(d: Distortion, level: str, m: int) -> Distortion:
    """Distortion after adding m active spares per component or per system.

    level="component": p -> h(1 - (1-p)^{m+1}), every component backed by m
    independent copies of itself. level="system": p -> 1 - (1 - h(p))^{m+1},
    the whole system replicated m times in parallel.
    """
    if int(m) != m or m < 1:
        raise BadThreshold(m, m)
    m = int(m)
    if level not in ("component", "system"):
        raise ValueError(f"level must be 'component' or 'system', got {level!r}")
    label = f"{d.label} +{m} spares per {level}"

    if isinstance(d.backing, PolyBacking):
        h = list(d.backing.coeffs)
        if level == "component":
            inner = _padd([Fraction(1)], _pscale(_ppow(_ONE_MINUS_X, m + 1), -1))
            return Distortion(PolyBacking(_pcompose(h, inner)), label)
        one_minus_h = _padd([Fraction(1)], _pscale(h, -1))
        out = _padd([Fraction(1)], _pscale(_ppow(one_minus_h, m + 1), -1))
        return Distortion(PolyBacking(out), label)

    if isinstance(d.backing, PowerSumBacking) and level == "system":
        # (1 - h)^{m+1} is again a power sum; exponents add under products
        terms: dict[float, float] = {0.0: 1.0}
        factor = [(1.0, 0.0)] + [
            (-c, e) for c, e in zip(d.backing.weights, d.backing.exponents)
        ]
        for _ in range(m + 1):
            nxt: dict[float, float] = {}
            for e1, c1 in terms.items():
                for c2, e2 in factor:
                    key = e1 + e2
                    nxt[key] = nxt.get(key, 0.0) + c1 * c2
            terms = nxt
        const = 1.0 - terms.get(0.0, 0.0)
        if abs(const) > 1e-9:
            raise DegenerateDistortion("system redundancy expansion lost h(0)=0")
        final = [(-c, e) for e, c in terms.items() if e != 0.0]
        return Distortion(PowerSumBacking(final), label)

    base = d.backing
    if level == "component":

        def tau(p):
            return -np.expm1((m + 1.0) * np.log1p(-p))

        def fn(p):
            return base.eval(tau(p))

        def d1(p):
            return base.d1(tau(p)) * (m + 1.0) * (1.0 - p) ** m

        def d2(p):
            t1 = (m + 1.0) * (1.0 - p) ** m
            t2 = -(m + 1.0) * m * (1.0 - p) ** (m - 1)
            return base.d2(tau(p)) * t1**2 + base.d1(tau(p)) * t2

        def omc(w):
            return base.one_minus_c(np.asarray(w, dtype=float) ** (m + 1))

        return Distortion(CallableBacking(fn, d1=d1, d2=d2, one_minus_c=omc), label)

    def fn(p):
        with np.errstate(divide="ignore"):
            return -np.expm1((m + 1.0) * np.log(base.one_minus(p)))

    def d1(p):
        return (m + 1.0) * base.one_minus(p) ** m * base.d1(p)

    def d2(p):
        om = base.one_minus(p)
        return (m + 1.0) * om ** (m - 1) * (om * base.d2(p) - m * base.d1(p) ** 2)

    def omc(w):
        return np.exp((m + 1.0) * np.log(base.one_minus_c(w)))

    return Distortion(CallableBacking(fn, d1=d1, d2=d2, one_minus_c=omc), label)
