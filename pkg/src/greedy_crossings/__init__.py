"""Greedy geometric spanners: construction, crossings, separators."""

from ._backend import BACKEND
from .adversarial import ArrangementSpec, ZigZagSpec, analyze_long_edge, three_band_arrangement, thresholds, zigzag_points
from .crossings import (
    AngleBucketConfig,
    BandParams,
    bound_band,
    bound_long_parallel,
    bound_total_not_smaller,
    build_crossing_graph,
    crossing_profile,
    degeneracy,
    verify_endpoint_ordering,
    verify_gap_property,
)
from .geometry import Point, PointSet, Segment
from .planar import planar_separator, planarize, separator_hierarchy, spanner_separator, sssp_baseline
from .spanner import SpannerConfig, SpannerGraph, greedy_spanner_fast, greedy_spanner_naive, verify_no_shortcut, verify_stretch

__all__ = [
    "BACKEND",
    "AngleBucketConfig",
    "ArrangementSpec",
    "BandParams",
    "Point",
    "PointSet",
    "Segment",
    "SpannerConfig",
    "SpannerGraph",
    "ZigZagSpec",
    "analyze_long_edge",
    "bound_band",
    "bound_long_parallel",
    "bound_total_not_smaller",
    "build_crossing_graph",
    "crossing_profile",
    "degeneracy",
    "greedy_spanner_fast",
    "greedy_spanner_naive",
    "planar_separator",
    "planarize",
    "separator_hierarchy",
    "spanner_separator",
    "sssp_baseline",
    "thresholds",
    "three_band_arrangement",
    "verify_endpoint_ordering",
    "verify_gap_property",
    "verify_no_shortcut",
    "verify_stretch",
    "zigzag_points",
]
