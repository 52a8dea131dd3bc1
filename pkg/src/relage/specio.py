"""JSON system specifications and deterministic report serialization.

A system spec is a JSON object::

    {"structure": {"type": "path_sets", "n": 3, "path_sets": [[1,2],[1,3]]}
                | {"type": "k_out_of_n", "k": 2, "n": 3},
     "copula":   {"type": "independence"} | {"type": "fgm", "theta": 0.3}
                | {"type": "gumbel", "theta": 2.0} | {"type": "clayton", "theta": 1.5},
     "marginal": {"type": "weibull", "rate": 2, "shape": 3}
                | {"type": "frechet", "scale": 2.1, "shape": 7}
                | {"type": "exponential", "rate": 1}}          # optional

Parse errors raise SpecError whose ``path`` names the offending JSON field
(e.g. "copula.theta"). Reports are serialized with sorted keys and a fixed
layout so identical inputs produce byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .copulas import SurvivalCopula
from .distortion import Distortion, build_distortion
from .errors import InvalidParameter, RelageError, SpecError
from .lifetimes import LifetimeModel, marginal_from_spec
from .structures import StructureFunction, build_structure

_COPULA_TYPES = ("independence", "fgm", "gumbel", "clayton")


@dataclass(frozen=True)
class SystemSpec:
    structure: StructureFunction
    copula: SurvivalCopula
    marginal: LifetimeModel | None
    raw: dict

    def distortion(self) -> Distortion:
        return build_distortion(self.structure, self.copula)

    def require_marginal(self) -> LifetimeModel:
        if self.marginal is None:
            raise SpecError("marginal", "this command needs a marginal")
        return self.marginal


def _structure_from(obj: dict) -> StructureFunction:
    if not isinstance(obj, dict):
        raise SpecError("structure", "must be an object")
    kind = obj.get("type")
    try:
        if kind == "path_sets":
            if "n" not in obj or "path_sets" not in obj:
                raise SpecError("structure", "path_sets form needs 'n' and 'path_sets'")
            return build_structure(obj)
        if kind == "k_out_of_n":
            if "k" not in obj or "n" not in obj:
                raise SpecError("structure", "k_out_of_n form needs 'k' and 'n'")
            return build_structure(obj)
    except SpecError:
        raise
    except RelageError as exc:
        raise SpecError("structure", str(exc)) from exc
    raise SpecError("structure.type", f"unknown structure type {kind!r}")


def _copula_from(obj: dict, n: int) -> SurvivalCopula:
    if not isinstance(obj, dict):
        raise SpecError("copula", "must be an object")
    kind = obj.get("type")
    if kind not in _COPULA_TYPES:
        raise SpecError("copula.type", f"unknown copula type {kind!r}")
    theta = obj.get("theta")
    if kind != "independence" and theta is None:
        raise SpecError("copula.theta", f"{kind} copula needs 'theta'")
    try:
        if kind == "independence":
            return SurvivalCopula("independence", n)
        return SurvivalCopula(kind, n, theta=float(theta))
    except InvalidParameter as exc:
        raise SpecError("copula.theta", str(exc)) from exc


def _marginal_from(obj: dict) -> LifetimeModel:
    if not isinstance(obj, dict):
        raise SpecError("marginal", "must be an object")
    try:
        return marginal_from_spec(obj)
    except RelageError as exc:
        raise SpecError("marginal", str(exc)) from exc


def load_system(obj: dict) -> SystemSpec:
    if not isinstance(obj, dict):
        raise SpecError("", "system spec must be a JSON object")
    if "structure" not in obj:
        raise SpecError("structure", "missing")
    if "copula" not in obj:
        raise SpecError("copula", "missing")
    structure = _structure_from(obj["structure"])
    copula = _copula_from(obj["copula"], structure.n)
    marginal = _marginal_from(obj["marginal"]) if "marginal" in obj else None
    return SystemSpec(structure, copula, marginal, raw=obj)


def load_system_file(path: str) -> SystemSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise SpecError(path, f"cannot read: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(path, f"invalid JSON: {exc}") from exc
    return load_system(obj)


def dump_report(report: dict) -> str:
    """Canonical JSON: sorted keys, two-space indent, trailing newline."""
    return json.dumps(report, sort_keys=True, indent=2, allow_nan=False) + "\n"
