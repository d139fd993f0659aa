"""Truncated Laurent-series matrix models of bounded subgroups of SL_m."""

from .matrix import TruncatedLaurentMatrix
from .pattern import (NonCommutingDemo, ValuationPattern, embed_uniformizer, entry_root,
                      is_member, moy_prasad_pattern, noncommuting_demo, pattern,
                      sample_member, specialize_diag)
from .series import SeriesRing, TruncatedSeries

__all__ = [
    "NonCommutingDemo", "SeriesRing", "TruncatedLaurentMatrix", "TruncatedSeries",
    "ValuationPattern", "embed_uniformizer", "entry_root", "is_member",
    "moy_prasad_pattern", "noncommuting_demo", "pattern", "sample_member",
    "specialize_diag",
]
