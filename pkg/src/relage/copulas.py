"""Exchangeable survival copulas: evaluation and sampling.

Families: independence, Farlie-Gumbel-Morgenstern (one parameter),
Gumbel-Hougaard, Clayton-Oakes, and generic Archimedean built from a
user-supplied decreasing generator. All implemented families are
exchangeable, which the distortion builder exploits: it only ever needs the
diagonal section K(p, .., p, 1, .., 1).

Sampling returns vectors whose joint *distribution* function equals K, i.e.
the sampled coordinates play the role of survival levels F-bar(X_i). Frailty
(scale-mixture) constructions cover the two Archimedean families; the
trivariate FGM is sampled by sequential conditional inversion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    GeneratorNotDecreasing,
    InternalInconsistency,
    InvalidParameter,
    OutOfUnitInterval,
    UnsupportedFamilyForSampling,
)

_CLAMP = 1e-12


@dataclass(frozen=True)
class Generator:
    """Archimedean generator psi: [0, inf) -> (0, 1], decreasing, psi(0)=1.

    ``psi_inv`` may be omitted; it is then computed by bisection to 1e-12.
    ``d1``/``d2`` are optional derivatives used for exact distortion
    derivatives when available. All callables must accept numpy arrays.
    """

    psi: Callable[[np.ndarray], np.ndarray]
    psi_inv: Callable[[np.ndarray], np.ndarray] | None = None
    d1: Callable[[np.ndarray], np.ndarray] | None = None
    d2: Callable[[np.ndarray], np.ndarray] | None = None
    label: str = "generator"

    def inverse(self, u):
        if self.psi_inv is not None:
            return self.psi_inv(u)
        return _bisect_inverse(self.psi, u)

    def validate(self, grid_points: int = 64) -> None:
        t = np.geomspace(1e-8, 1e8, grid_points)
        v = np.asarray(self.psi(t), dtype=float)
        if not np.all(np.isfinite(v)):
            raise GeneratorNotDecreasing("generator not finite on sample grid")
        if np.any(np.diff(v) > 1e-12):
            raise GeneratorNotDecreasing("generator must be decreasing")
        if abs(float(self.psi(np.array(0.0))) - 1.0) > 1e-9:
            raise GeneratorNotDecreasing("generator must satisfy psi(0) = 1")
        if v[-1] > 1e-3:
            raise GeneratorNotDecreasing("generator must vanish at infinity")


def _bisect_inverse(psi, u, tol: float = 1e-12):
    """Solve psi(t) = u for t >= 0 by bracketing + bisection (vectorized)."""
    u = np.asarray(u, dtype=float)
    scalar = u.ndim == 0
    u = np.atleast_1d(u)
    lo = np.zeros_like(u)
    hi = np.ones_like(u)
    # grow hi until psi(hi) <= u
    for _ in range(200):
        mask = np.asarray(psi(hi)) > u
        if not mask.any():
            break
        hi[mask] *= 2.0
    for _ in range(100):
        mid = 0.5 * (lo + hi)
        below = np.asarray(psi(mid)) > u
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
        if np.max(hi - lo) < tol:
            break
    out = 0.5 * (lo + hi)
    return float(out[0]) if scalar else out


@dataclass(frozen=True)
class SurvivalCopula:
    """Exchangeable survival copula of a fixed dimension."""

    family: str  # independence | fgm | gumbel | clayton | archimedean
    n: int
    theta: float | None = None
    generator: Generator | None = None

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch(f"dimension must be >= 1, got {self.n}")
        if self.family == "fgm":
            if self.theta is None or not (-1.0 <= self.theta <= 1.0):
                raise InvalidParameter(f"fgm theta must be in [-1, 1], got {self.theta}")
        elif self.family == "gumbel":
            if self.theta is None or self.theta < 1.0:
                raise InvalidParameter(f"gumbel theta must be >= 1, got {self.theta}")
        elif self.family == "clayton":
            if self.theta is None or self.theta <= 0.0:
                raise InvalidParameter(f"clayton theta must be > 0, got {self.theta}")
        elif self.family == "archimedean":
            if self.generator is None:
                raise InvalidParameter("archimedean copula needs a generator")
            self.generator.validate()
        elif self.family != "independence":
            raise InvalidParameter(f"unknown copula family {self.family!r}")
        self._check_corners()

    def _check_corners(self):
        ones = np.ones(self.n)
        top = float(self.eval(ones))
        if abs(top - 1.0) > 1e-9:
            raise InvalidParameter(f"K(1,..,1) = {top}, expected 1")
        if self.n >= 1:
            z = ones.copy()
            z[0] = 0.0
            if float(self.eval(z)) > 1e-15:
                raise InvalidParameter("K must vanish when a coordinate is 0")

    # ------------------------------------------------------------ evaluation

    def eval(self, u: Sequence[float]) -> float:
        u = np.asarray(u, dtype=float)
        if u.shape != (self.n,):
            raise DimensionMismatch(f"expected {self.n} coordinates, got shape {u.shape}")
        if np.any(u < 0.0) or np.any(u > 1.0):
            raise OutOfUnitInterval(f"coordinates must lie in [0, 1], got {u}")
        val = float(self._eval_unchecked(u))
        if val < -_CLAMP or val > 1.0 + _CLAMP:
            raise InternalInconsistency(f"copula value {val} outside [0, 1]")
        return min(max(val, 0.0), 1.0)

    def _eval_unchecked(self, u: np.ndarray) -> float:
        fam = self.family
        if fam == "independence":
            return float(np.prod(u))
        if fam == "fgm":
            return float(np.prod(u) * (1.0 + self.theta * np.prod(1.0 - u)))
        if fam == "gumbel":
            if np.any(u == 0.0):
                return 0.0
            t = -np.log(u)
            m = t.max()
            if m == 0.0:
                return 1.0
            s = m * np.sum((t / m) ** self.theta) ** (1.0 / self.theta)
            return math.exp(-s) if s < 745.0 else 0.0
        if fam == "clayton":
            if np.any(u == 0.0):
                return 0.0
            a = -self.theta * np.log(u)  # u_i^-theta = exp(a_i)
            m = a.max()
            # log(sum exp(a_i) - (n-1)) computed around the max term
            inner = np.sum(np.exp(a - m)) - (self.n - 1) * math.exp(-m)
            if inner <= 0.0:
                return 0.0
            logsum = m + math.log(inner)
            return math.exp(-logsum / self.theta)
        # generic Archimedean
        if np.any(u == 0.0):
            return 0.0
        g = self.generator
        return float(g.psi(np.sum(g.inverse(u))))

    def diagonal_section(self, a: int, p: np.ndarray) -> np.ndarray:
        """K with p at a coordinates and 1 at the rest, vectorized in p.

        This is the survival probability of a specific set of ``a`` components
        at common marginal survival level p; exchangeability makes it depend
        on ``a`` only.
        """
        if not (0 <= a <= self.n):
            raise DimensionMismatch(f"need 0 <= a <= {self.n}, got {a}")
        p = np.asarray(p, dtype=float)
        if a == 0:
            return np.ones_like(p)
        fam = self.family
        if fam == "independence":
            return p**a
        if fam == "fgm":
            if a < self.n:
                return p**a
            return p**a * (1.0 + self.theta * (1.0 - p) ** self.n)
        if fam == "gumbel":
            return p ** (a ** (1.0 / self.theta))
        if fam == "clayton":
            with np.errstate(over="ignore"):
                base = a * p ** (-self.theta) - (a - 1.0)
                out = base ** (-1.0 / self.theta)
            return np.where(p == 0.0, 0.0, out)
        g = self.generator
        return np.where(p == 0.0, 0.0, g.psi(a * g.inverse(np.where(p == 0.0, 0.5, p))))

    # -------------------------------------------------------------- sampling

    def sample(self, count: int, seed: int) -> np.ndarray:
        """Deterministic (count, n) sample; rows have joint CDF equal to K."""
        if count < 1:
            raise InvalidParameter(f"count must be >= 1, got {count}")
        rng = np.random.default_rng(seed)
        fam = self.family
        if fam == "independence":
            return rng.random((count, self.n))
        if fam == "fgm":
            if self.n != 3:
                raise UnsupportedFamilyForSampling(
                    "fgm sampling implemented for dimension 3 only"
                )
            raw = rng.random((count, 3))
            w1, w2, v = raw[:, 0], raw[:, 1], raw[:, 2]
            # third coordinate by inverting its conditional CDF, a quadratic;
            # the first two are independent uniforms for the one-parameter FGM
            a = self.theta * (1.0 - 2.0 * w1) * (1.0 - 2.0 * w2)
            w3 = 2.0 * v / (1.0 + a + np.sqrt((1.0 + a) ** 2 - 4.0 * a * v))
            return np.column_stack([w1, w2, w3])
        if fam == "gumbel":
            e = rng.exponential(size=(count, self.n))
            if self.theta == 1.0:
                return np.exp(-e)
            alpha = 1.0 / self.theta
            s = _positive_stable(alpha, count, rng)
            return np.exp(-((e / s[:, None]) ** alpha))
        if fam == "clayton":
            v = rng.gamma(shape=1.0 / self.theta, scale=1.0, size=count)
            e = rng.exponential(size=(count, self.n))
            return (1.0 + e / v[:, None]) ** (-1.0 / self.theta)
        raise UnsupportedFamilyForSampling(
            f"no sampling recipe for family {self.family!r}"
        )


def _positive_stable(alpha: float, count: int, rng: np.random.Generator) -> np.ndarray:
    """One-sided stable variates with Laplace transform exp(-s^alpha)."""
    theta = rng.uniform(0.0, math.pi, count)
    w = rng.exponential(size=count)
    a = np.sin(alpha * theta) / np.sin(theta) ** (1.0 / alpha)
    b = (np.sin((1.0 - alpha) * theta) / w) ** ((1.0 - alpha) / alpha)
    return a * b


# ------------------------------------------------------------- constructors

def independence(n: int) -> SurvivalCopula:
    return SurvivalCopula("independence", n)


def fgm(theta: float, n: int = 3) -> SurvivalCopula:
    return SurvivalCopula("fgm", n, theta=theta)


def gumbel_hougaard(theta: float, n: int) -> SurvivalCopula:
    return SurvivalCopula("gumbel", n, theta=theta)


def clayton_oakes(theta: float, n: int) -> SurvivalCopula:
    return SurvivalCopula("clayton", n, theta=theta)


def archimedean(generator: Generator, n: int) -> SurvivalCopula:
    return SurvivalCopula("archimedean", n, generator=generator)


def gumbel_generator(theta: float) -> Generator:
    if theta < 1.0:
        raise InvalidParameter(f"gumbel theta must be >= 1, got {theta}")
    return Generator(
        psi=lambda t: np.exp(-np.asarray(t, float) ** (1.0 / theta)),
        psi_inv=lambda u: (-np.log(u)) ** theta,
        d1=lambda t: -(1.0 / theta)
        * np.asarray(t, float) ** (1.0 / theta - 1.0)
        * np.exp(-np.asarray(t, float) ** (1.0 / theta)),
        label=f"gumbel_generator(theta={theta})",
    )


def clayton_generator(theta: float) -> Generator:
    if theta <= 0.0:
        raise InvalidParameter(f"clayton theta must be > 0, got {theta}")
    return Generator(
        psi=lambda t: (1.0 + np.asarray(t, float)) ** (-1.0 / theta),
        psi_inv=lambda u: np.asarray(u, float) ** (-theta) - 1.0,
        d1=lambda t: (-1.0 / theta) * (1.0 + np.asarray(t, float)) ** (-1.0 / theta - 1.0),
        label=f"clayton_generator(theta={theta})",
    )


def eval_copula(copula: SurvivalCopula, u: Sequence[float]) -> float:
    return copula.eval(u)


def sample_copula(copula: SurvivalCopula, count: int, seed: int) -> np.ndarray:
    return copula.sample(count, seed)
