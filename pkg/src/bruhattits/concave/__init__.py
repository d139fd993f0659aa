"""Concave functions on root systems."""

from .classify import (TypeI, TypeII, TypeIII, TypeWitness, classify, regularize,
                       type_one_system, type_two_system, witness_json)
from .feasibility import Eps, feasible_point
from .maps import (ConcaveMap, ConcaveTuple, MoyPrasadDatum, ceiling, combine,
                   concave_values, find_violation, from_point, from_set, is_concave,
                   moy_prasad, pointwise_sup, require_concave)

__all__ = [
    "ConcaveMap", "ConcaveTuple", "MoyPrasadDatum", "TypeI", "TypeII", "TypeIII",
    "TypeWitness", "Eps", "ceiling", "classify", "combine", "concave_values",
    "feasible_point", "find_violation", "from_point", "from_set", "is_concave",
    "moy_prasad", "pointwise_sup", "regularize", "require_concave", "type_one_system",
    "type_two_system", "witness_json",
]
