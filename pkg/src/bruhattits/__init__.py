"""Exact combinatorics of Bruhat-Tits theory over higher-dimensional bases.

Root systems, apartment arithmetic, concave functions and their
classification, truncated Laurent-series matrix models for SL_m, and
closed-fibre root data.
"""

from .apartment import (ApartmentPoint, BoundedSet, alcove_reduce, alcove_vertices,
                        barycenter, d_alpha, denominator, m_point, m_set)
from .concave import (ConcaveMap, ConcaveTuple, MoyPrasadDatum, TypeI, TypeII, TypeIII,
                      ceiling, classify, combine, find_violation, from_point, from_set,
                      is_concave, moy_prasad, pointwise_sup, regularize)
from .errors import BruhatTitsError
from .fibre import (FibreRootDatum, McKayData, facet_fibre, fibre_roots, mckay_ad,
                    phi_theta, subdiagonal_fibre)
from .rootsystem import (DynkinType, GroupConstants, RootSystem, build_root_system,
                         group_constants, pairing)
from .seriesgroup import (SeriesRing, TruncatedLaurentMatrix, TruncatedSeries,
                          ValuationPattern, embed_uniformizer, is_member, pattern,
                          sample_member, specialize_diag)

__all__ = [
    "ApartmentPoint", "BoundedSet", "BruhatTitsError", "ConcaveMap", "ConcaveTuple",
    "DynkinType", "FibreRootDatum", "GroupConstants", "McKayData", "MoyPrasadDatum",
    "RootSystem", "SeriesRing", "TruncatedLaurentMatrix", "TruncatedSeries", "TypeI",
    "TypeII", "TypeIII", "ValuationPattern", "alcove_reduce", "alcove_vertices",
    "barycenter", "build_root_system", "ceiling", "classify", "combine", "d_alpha",
    "denominator", "embed_uniformizer", "facet_fibre", "fibre_roots", "find_violation",
    "from_point", "from_set", "group_constants", "is_concave", "is_member", "m_point",
    "m_set", "mckay_ad", "moy_prasad", "pairing", "pattern", "phi_theta",
    "pointwise_sup", "regularize", "sample_member", "specialize_diag",
    "subdiagonal_fibre",
]
