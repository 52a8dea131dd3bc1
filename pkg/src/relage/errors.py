"""Exception hierarchy for relage.

Every error raised by the library derives from :class:`RelageError` so callers
can catch one base type. Validation errors carry enough context (offending
index, pair, or value) to produce actionable diagnostics.
"""

from __future__ import annotations


class RelageError(Exception):
    """Base class for all relage errors."""


# ---------------------------------------------------------------- structures

class EmptyPathSets(RelageError):
    pass


class NonMinimalPathSet(RelageError):
    def __init__(self, subset, superset):
        self.subset = frozenset(subset)
        self.superset = frozenset(superset)
        super().__init__(
            f"path set {sorted(self.subset)} is contained in {sorted(self.superset)}"
        )


class IrrelevantComponent(RelageError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"component {index} appears in no path set")


class IndexOutOfRange(RelageError):
    def __init__(self, index, n):
        self.index = index
        super().__init__(f"component index {index} outside 1..{n}")


class BadThreshold(RelageError):
    def __init__(self, k, n):
        super().__init__(f"need 1 <= k <= n, got k={k}, n={n}")


class LengthMismatch(RelageError):
    pass


# ------------------------------------------------------------------- copulas

class OutOfUnitInterval(RelageError):
    pass


class DimensionMismatch(RelageError):
    pass


class InvalidParameter(RelageError):
    pass


class UnsupportedFamilyForSampling(RelageError):
    pass


class GeneratorNotDecreasing(RelageError):
    pass


# ---------------------------------------------------------------- distortion

class PathSetExplosion(RelageError):
    pass


class InvalidCopula(RelageError):
    pass


class BoundaryEvaluation(RelageError):
    pass


class DegenerateDistortion(RelageError):
    pass


# ----------------------------------------------------------------- lifetimes

class BadParameter(RelageError):
    pass


class NonpositiveX(RelageError):
    pass


class DeadAtT(RelageError):
    pass


# -------------------------------------------------------------------- engine

class NonFiniteValue(RelageError):
    def __init__(self, where, value):
        self.where = where
        self.value = value
        super().__init__(f"non-finite value {value!r} at {where!r}")


class InternalInconsistency(RelageError):
    """A criterion verdict contradicts its direct cross-validation."""


# ----------------------------------------------------------------- CLI / IO

class SpecError(RelageError):
    """Invalid JSON system specification; ``path`` names the offending field."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}")
