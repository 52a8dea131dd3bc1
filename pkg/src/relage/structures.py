"""Coherent-system structure functions.

A structure is given either by its minimal path sets or as a k-out-of-n
threshold rule. Path-set semantics are inherently monotone, so coherence
reduces to two checks: every component is relevant, and no path set contains
another. k-out-of-n structures stay symbolic; their path sets (all k-subsets)
are only materialized for small n when an exhaustive oracle needs them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .errors import (
    BadThreshold,
    EmptyPathSets,
    IndexOutOfRange,
    IrrelevantComponent,
    LengthMismatch,
    NonMinimalPathSet,
)

ENUMERATION_CAP = 12


@dataclass(frozen=True)
class StructureFunction:
    """Validated monotone structure on components 1..n.

    Exactly one of ``path_sets`` (tuple of frozensets) or ``k`` (threshold)
    is set. Instances are immutable and safe to share across threads.
    """

    n: int
    path_sets: tuple[frozenset[int], ...] | None = None
    k: int | None = None
    label: str = field(default="", compare=False)

    @property
    def is_k_out_of_n(self) -> bool:
        return self.k is not None

    def evaluate(self, states: Sequence[int]) -> bool:
        """System state for a 0/1 component-state vector of length n."""
        if len(states) != self.n:
            raise LengthMismatch(f"expected {self.n} states, got {len(states)}")
        if self.k is not None:
            return sum(1 for s in states if s) >= self.k
        assert self.path_sets is not None
        return any(all(states[i - 1] for i in ps) for ps in self.path_sets)

    def materialized_path_sets(self, cap: int = ENUMERATION_CAP) -> tuple[frozenset[int], ...]:
        """Minimal path sets, materializing k-subsets for k-out-of-n (n <= cap)."""
        if self.path_sets is not None:
            return self.path_sets
        if self.n > cap:
            raise BadThreshold(self.k, self.n) from None
        return tuple(
            frozenset(c) for c in combinations(range(1, self.n + 1), self.k)
        )


def path_sets_structure(n: int, path_sets: Sequence[Sequence[int]]) -> StructureFunction:
    """Validate and build a structure from explicit minimal path sets."""
    if not isinstance(n, int) or n < 1:
        raise IndexOutOfRange(n, n)
    sets = [frozenset(ps) for ps in path_sets]
    if not sets or any(len(s) == 0 for s in sets):
        raise EmptyPathSets("at least one nonempty path set is required")
    for s in sets:
        for i in s:
            if not isinstance(i, int) or not (1 <= i <= n):
                raise IndexOutOfRange(i, n)
    for a, b in combinations(sets, 2):
        if a <= b:
            raise NonMinimalPathSet(a, b)
        if b <= a:
            raise NonMinimalPathSet(b, a)
    covered = frozenset().union(*sets)
    for i in range(1, n + 1):
        if i not in covered:
            raise IrrelevantComponent(i)
    label = f"path_sets(n={n}, r={len(sets)})"
    return StructureFunction(n=n, path_sets=tuple(sets), label=label)


def k_out_of_n_structure(k: int, n: int) -> StructureFunction:
    """Symbolic k-out-of-n structure (series: k=n, parallel: k=1)."""
    if not isinstance(k, int) or not isinstance(n, int) or not (1 <= k <= n):
        raise BadThreshold(k, n)
    return StructureFunction(n=n, k=k, label=f"k_out_of_n({k},{n})")


def build_structure(spec) -> StructureFunction:
    """Build from a JSON-style dict, an (k, n) pair, or pass through.

    Dict forms:
      {"type": "path_sets", "n": 3, "path_sets": [[1, 2], [1, 3]]}
      {"type": "k_out_of_n", "k": 2, "n": 3}
    """
    if isinstance(spec, StructureFunction):
        return spec
    if isinstance(spec, dict):
        kind = spec.get("type")
        if kind == "path_sets":
            return path_sets_structure(spec["n"], spec["path_sets"])
        if kind == "k_out_of_n":
            return k_out_of_n_structure(spec["k"], spec["n"])
        raise EmptyPathSets(f"unknown structure type {kind!r}")
    if isinstance(spec, tuple) and len(spec) == 2:
        return k_out_of_n_structure(spec[0], spec[1])
    raise EmptyPathSets(f"cannot interpret structure spec {spec!r}")


def evaluate_structure(phi: StructureFunction, states: Sequence[int]) -> bool:
    return phi.evaluate(states)
