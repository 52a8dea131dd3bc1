"""Grid-based monotonicity classification with witnesses.

A function on an interval is classified as increasing, decreasing, constant
or non-monotone by measuring its largest cumulative rise and fall over a
grid. A rise (fall) counts only when it exceeds a relative tolerance, so
"increasing" and "decreasing" are the non-strict readings and a ratio that
is constant up to tolerance satisfies both directions.

When both a significant rise and fall are present, the engine re-samples the
two offending spans at 10x density before declaring non-monotonicity, and
reports one rising and one falling witness pair whose violations exceed the
tolerance by construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from ._util import ABS_TOL_FLOOR, DEFAULT_GRID, DEFAULT_TOL
from .errors import NonFiniteValue

INCREASING = "increasing"
DECREASING = "decreasing"
CONSTANT = "constant"
NON_MONOTONE = "non_monotone"


@dataclass(frozen=True)
class WitnessPair:
    """Two points x1 < x2 with the function values that violate a direction."""

    x1: float
    x2: float
    f1: float
    f2: float

    def as_dict(self):
        return {"x1": self.x1, "x2": self.x2, "f1": self.f1, "f2": self.f2}


@dataclass(frozen=True)
class MonotonicityVerdict:
    classification: str
    max_violation: float
    sign_changes: int
    grid: str
    rising: WitnessPair | None = None
    falling: WitnessPair | None = None

    @property
    def is_increasing(self) -> bool:
        """Non-strict: constant counts as increasing."""
        return self.classification in (INCREASING, CONSTANT)

    @property
    def is_decreasing(self) -> bool:
        return self.classification in (DECREASING, CONSTANT)

    def as_dict(self):
        out = {
            "classification": self.classification,
            "max_violation": self.max_violation,
            "sign_changes": self.sign_changes,
            "grid": self.grid,
        }
        if self.rising is not None:
            out["rising_witness"] = self.rising.as_dict()
        if self.falling is not None:
            out["falling_witness"] = self.falling.as_dict()
        return out


def _pair_threshold(f1: float, f2: float, tol: float) -> float:
    return max(tol * max(1.0, abs(f1), abs(f2)), ABS_TOL_FLOOR)


def _extreme_pairs(xs: np.ndarray, fs: np.ndarray):
    """Largest cumulative rise and fall with their witness index pairs."""
    run_min = np.minimum.accumulate(fs)
    rises = fs[1:] - run_min[:-1]
    j_rise = int(np.argmax(rises)) + 1
    i_rise = int(np.argmin(fs[:j_rise]))
    max_rise = float(fs[j_rise] - fs[i_rise])

    run_max = np.maximum.accumulate(fs)
    falls = run_max[:-1] - fs[1:]
    j_fall = int(np.argmax(falls)) + 1
    i_fall = int(np.argmax(fs[:j_fall]))
    max_fall = float(fs[i_fall] - fs[j_fall])
    return (max_rise, i_rise, j_rise), (max_fall, i_fall, j_fall)


def _sign_changes(fs: np.ndarray, tol: float) -> int:
    d = np.diff(fs)
    thr = np.maximum(tol * np.maximum(1.0, np.maximum(np.abs(fs[:-1]), np.abs(fs[1:]))),
                     ABS_TOL_FLOOR)
    signs = np.where(d > thr, 1, np.where(d < -thr, -1, 0))
    signs = signs[signs != 0]
    if signs.size == 0:
        return 0
    return int(np.count_nonzero(np.diff(signs)))


def _evaluate(f: Callable, xs: np.ndarray) -> np.ndarray:
    fs = np.asarray(f(xs), dtype=float)
    if fs.shape != xs.shape:
        fs = np.broadcast_to(fs, xs.shape).astype(float)
    bad = ~np.isfinite(fs)
    if bad.any():
        idx = int(np.argmax(bad))
        raise NonFiniteValue(float(xs[idx]), float(fs[idx]))
    return fs


def check_monotone(
    f: Callable[[np.ndarray], np.ndarray],
    lo: float,
    hi: float,
    *,
    grid_points: int = DEFAULT_GRID,
    tol: float = DEFAULT_TOL,
    log_spaced: bool = False,
    refine_factor: int = 10,
) -> MonotonicityVerdict:
    """Classify the monotonicity of a vectorized function on [lo, hi]."""
    if not (hi > lo):
        raise ValueError(f"need lo < hi, got [{lo}, {hi}]")
    if log_spaced:
        xs = np.geomspace(lo, hi, grid_points)
    else:
        xs = np.linspace(lo, hi, grid_points)
    fs = _evaluate(f, xs)
    grid_desc = (
        f"{grid_points} {'log' if log_spaced else 'linear'} points on "
        f"[{lo:g}, {hi:g}]"
    )

    (max_rise, ir, jr), (max_fall, ifa, jf) = _extreme_pairs(xs, fs)
    rising_sig = max_rise > _pair_threshold(fs[ir], fs[jr], tol)
    falling_sig = max_fall > _pair_threshold(fs[ifa], fs[jf], tol)

    if rising_sig and falling_sig and refine_factor > 1:
        # sharpen both spans on a 10x local grid before declaring
        extra = []
        for i, j in ((ir, jr), (ifa, jf)):
            a = xs[max(i - 1, 0)]
            b = xs[min(j + 1, xs.size - 1)]
            n_local = min((j - i + 2) * refine_factor, 10 * grid_points)
            extra.append(np.linspace(a, b, n_local))
        xs = np.unique(np.concatenate([xs] + extra))
        fs = _evaluate(f, xs)
        grid_desc += " (+local 10x refinement)"
        (max_rise, ir, jr), (max_fall, ifa, jf) = _extreme_pairs(xs, fs)
        rising_sig = max_rise > _pair_threshold(fs[ir], fs[jr], tol)
        falling_sig = max_fall > _pair_threshold(fs[ifa], fs[jf], tol)

    changes = _sign_changes(fs, tol)
    rise_pair = WitnessPair(float(xs[ir]), float(xs[jr]), float(fs[ir]), float(fs[jr]))
    fall_pair = WitnessPair(float(xs[ifa]), float(xs[jf]), float(fs[ifa]), float(fs[jf]))

    if rising_sig and falling_sig:
        return MonotonicityVerdict(
            NON_MONOTONE,
            max_violation=float(min(max_rise, max_fall)),
            sign_changes=changes,
            grid=grid_desc,
            rising=rise_pair,
            falling=fall_pair,
        )
    if rising_sig:
        return MonotonicityVerdict(
            INCREASING, max_violation=float(max(max_fall, 0.0)),
            sign_changes=changes, grid=grid_desc,
        )
    if falling_sig:
        return MonotonicityVerdict(
            DECREASING, max_violation=float(max(max_rise, 0.0)),
            sign_changes=changes, grid=grid_desc,
        )
    return MonotonicityVerdict(
        CONSTANT, max_violation=float(max(max_rise, max_fall, 0.0)),
        sign_changes=changes, grid=grid_desc,
    )
