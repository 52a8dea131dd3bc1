"""Small shared helpers: grids and the optional thread pool."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

import numpy as np

T = TypeVar("T")
U = TypeVar("U")

DEFAULT_GRID = 2001
DEFAULT_EPS = 1e-4
DEFAULT_TOL = 1e-9
ABS_TOL_FLOOR = 1e-12


def unit_grid(eps: float = DEFAULT_EPS, points: int = DEFAULT_GRID) -> np.ndarray:
    """Uniform grid on [eps, 1-eps]."""
    return np.linspace(eps, 1.0 - eps, points)


def geometric_grid(lo: float, hi: float, points: int = DEFAULT_GRID) -> np.ndarray:
    if not (0 < lo < hi):
        raise ValueError(f"need 0 < lo < hi, got [{lo}, {hi}]")
    return np.geomspace(lo, hi, points)


def thread_count() -> int:
    """Worker count from RELAGE_THREADS (0 or unset = auto)."""
    raw = os.environ.get("RELAGE_THREADS", "0")
    try:
        k = int(raw)
    except ValueError:
        k = 0
    if k < 0:
        k = 0
    if k == 0:
        # auto: stay serial; the sweeps are numpy-bound and order matters for
        # reproducible reports, so parallelism is strictly opt-in
        return 1
    return k


def parallel_map(fn: Callable[[T], U], items: Sequence[T]) -> list[U]:
    """Map preserving order; uses a thread pool when RELAGE_THREADS > 1."""
    k = thread_count()
    if k <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=k) as pool:
        return list(pool.map(fn, items))
