"""relage: relative-ageing comparisons of coherent systems.

Builds dual distortion functions of coherent systems with dependent
identically distributed components, evaluates their hazard and
reversed-hazard multipliers, and decides ageing-faster order relations
between systems, redundancy placements and used/residual systems by
numerical monotonicity certification.
"""

from .copulas import (
    Generator,
    SurvivalCopula,
    archimedean,
    clayton_generator,
    clayton_oakes,
    eval_copula,
    fgm,
    gumbel_generator,
    gumbel_hougaard,
    independence,
    sample_copula,
)
from .distortion import (
    Distortion,
    FunctionalValues,
    build_distortion,
    distortion_k_out_of_n,
    eval_functionals,
    identity_distortion,
    parallel_distortion,
    power_distortion,
    series_distortion,
    transform_redundancy,
)
from .errors import RelageError
from .lifetimes import (
    LifetimeModel,
    exponential,
    frechet,
    marginal_eval,
    marginal_from_spec,
    residual_model,
    system_lifetime,
    weibull,
)
from .monotone import MonotonicityVerdict, WitnessPair, check_monotone
from .orders import (
    ConditionEntry,
    ConditionReport,
    OrderVerdict,
    check_order,
    check_sufficient_conditions,
    compare_systems_exact,
    generator_condition,
    redundancy_verdict,
    residual_verdict,
)
from .reproduce import CASES, reproduce
from .specio import SystemSpec, load_system, load_system_file
from .structures import (
    StructureFunction,
    build_structure,
    evaluate_structure,
    k_out_of_n_structure,
    path_sets_structure,
)

__version__ = "0.1.0"

__all__ = [
    "CASES",
    "ConditionEntry",
    "ConditionReport",
    "Distortion",
    "FunctionalValues",
    "Generator",
    "LifetimeModel",
    "MonotonicityVerdict",
    "OrderVerdict",
    "RelageError",
    "StructureFunction",
    "SurvivalCopula",
    "SystemSpec",
    "WitnessPair",
    "archimedean",
    "build_distortion",
    "build_structure",
    "check_monotone",
    "check_order",
    "check_sufficient_conditions",
    "clayton_generator",
    "clayton_oakes",
    "compare_systems_exact",
    "distortion_k_out_of_n",
    "eval_copula",
    "eval_functionals",
    "evaluate_structure",
    "exponential",
    "fgm",
    "frechet",
    "generator_condition",
    "gumbel_generator",
    "gumbel_hougaard",
    "identity_distortion",
    "independence",
    "k_out_of_n_structure",
    "load_system",
    "load_system_file",
    "marginal_eval",
    "marginal_from_spec",
    "parallel_distortion",
    "path_sets_structure",
    "power_distortion",
    "redundancy_verdict",
    "reproduce",
    "residual_model",
    "residual_verdict",
    "sample_copula",
    "series_distortion",
    "system_lifetime",
    "transform_redundancy",
    "weibull",
]
