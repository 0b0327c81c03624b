import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import load_fixture
from greedy_crossings.adversarial import (
    T_MAX,
    T_MIN,
    ArrangementSpec,
    ZigZagSpec,
    analyze_long_edge,
    angle_window_ok,
    arrangement_layout,
    band_chains,
    band_edges,
    band_vertex_angles,
    middle_crossing_counts,
    stretch_for,
    three_band_arrangement,
    thresholds,
    vertex_angle,
    zigzag_is_spanner,
    zigzag_points,
)
from greedy_crossings.errors import InvalidParams, NoLongEdge
from greedy_crossings.spanner import SpannerConfig, greedy_spanner_fast, greedy_spanner_naive

SQ3 = math.sqrt(3)


def test_zigzag_examples():
    assert zigzag_points(ZigZagSpec(s=0, count=4)).xy.tolist() == [[0, 0], [1, 0], [2, 0], [3, 0]]
    assert zigzag_points(ZigZagSpec(s=1, count=3)).xy.tolist() == [[0, 0], [1, 1], [2, 0]]
    assert zigzag_points(ZigZagSpec(s=SQ3, count=3)).xy.tolist() == [[0, 0], [1, SQ3], [2, 0]]


@settings(max_examples=100)
@given(
    st.tuples(st.floats(-50, 50), st.floats(-50, 50)),
    st.floats(0.01, 10),
    st.floats(0, 5),
    st.integers(2, 30),
    st.floats(0, 2 * math.pi),
)
def test_zigzag_formula_bitwise(origin, dx, s, count, phi):
    u = (math.cos(phi), math.sin(phi))
    if abs(math.hypot(*u) - 1) >= 1e-12:
        return
    P = zigzag_points(ZigZagSpec(origin, dx, s, count, u)).xy
    for i in range(count):
        a = i * dx
        b = s * dx if i % 2 else 0.0
        assert P[i, 0] == origin[0] + a * u[0] + b * -u[1]
        assert P[i, 1] == origin[1] + a * u[1] + b * u[0]


def test_zigzag_validation():
    for kw in ({"dx": 0}, {"s": -1}, {"count": 1}, {"direction": (1, 1)}):
        with pytest.raises(InvalidParams):
            ZigZagSpec(**kw)


def test_zigzag_is_spanner_examples():
    assert zigzag_is_spanner(SQ3, 2)
    assert zigzag_is_spanner(0, 1.01)
    assert not zigzag_is_spanner(SQ3 + 0.01, 2)
    with pytest.raises(InvalidParams):
        zigzag_is_spanner(1, 1)


def _consecutive(g):
    return {(i, j) for i, j, _ in g.edges} == {(k, k + 1) for k in range(g.n - 1)}


# Beyond t=2 the zig-zag edges are longer than 2*dx, so greedy picks the
# same-row pairs first; the path is still a t-spanner but not greedy's output.
@pytest.mark.parametrize("t", [1.2, 1.5, 1.8, 2.0])
def test_zigzag_spanner_boundary(t):
    s = stretch_for(t)
    at = greedy_spanner_naive(zigzag_points(ZigZagSpec(s=s, count=20)), SpannerConfig(t))
    assert at.m == 19 and _consecutive(at)
    above = greedy_spanner_naive(zigzag_points(ZigZagSpec(s=s * 1.02, count=20)), SpannerConfig(t))
    assert above.m > 19
    below = greedy_spanner_naive(zigzag_points(ZigZagSpec(s=s * 0.9, count=20)), SpannerConfig(t))
    assert _consecutive(below)


def test_angle_window_inequality():
    # |cos| < 1/2 at the vertex iff 1/3 < s^2 < 3 iff 4/3 < t^2 < 4
    for s in (0.5, 1 / SQ3 * 1.001, 1.0, 1.5, SQ3 * 0.999, 1.8):
        deg = math.degrees(vertex_angle(s))
        assert (60 < deg < 120) == (1 / 3 < s * s < 3)
    assert math.degrees(vertex_angle(SQ3)) == pytest.approx(60)
    assert math.degrees(vertex_angle(1 / SQ3)) == pytest.approx(120)
    assert T_MIN == pytest.approx(math.sqrt(4 / 3)) and T_MAX == 2


@settings(max_examples=200)
@given(st.floats(1.01, 2.5), st.floats(0.001, 1.0))
def test_angle_window_matches_t_range(t, delta):
    if min(abs(t - T_MIN), abs(t + delta - T_MAX)) < 1e-9:
        return  # rounding decides exact boundary cases
    direct = all(60 < math.degrees(vertex_angle(stretch_for(x))) < 120 for x in (t, t + delta))
    assert angle_window_ok(t, delta) == direct
    assert direct == (T_MIN < t and t + delta < T_MAX)


def test_arrangement_examples():
    spec = ArrangementSpec(1.5, 0.2, 4)
    P = three_band_arrangement(spec)
    assert len(P) == 8
    assert sorted(set(P.xy[:, 0].tolist())) == [0, 1, 2, 3]
    ys = spec.row_y()
    gaps = [ys[0] - ys[1], ys[1] - ys[2], ys[2] - ys[3]]
    assert gaps == pytest.approx([math.sqrt(1.25), math.sqrt(1.89), math.sqrt(1.25)])
    small = ArrangementSpec(1.5, 0.2, 2)
    lay = arrangement_layout(small)
    assert len(three_band_arrangement(small)) == 4
    assert lay.rows.tolist() == [2, 4, 1, 3]


def test_arrangement_validation():
    for args in ((1.1, 0.2, 10), (1.5, 0.5, 10), (1.5, 0.2, 1), (1.5, -0.1, 10)):
        with pytest.raises(InvalidParams):
            ArrangementSpec(*args)


def test_band_chains_are_zigzags():
    spec = ArrangementSpec(1.5, 0.2, 12)
    ch = band_chains(spec)
    assert ch["U"] == [2 * c for c in range(12)]
    assert ch["B"] == [2 * c + 1 for c in range(12)]
    assert ch["M"] == [2 * c + (c % 2) for c in range(12)]
    P = three_band_arrangement(spec).xy
    for name, s in (("U", spec.s_u), ("M", spec.s_m), ("B", spec.s_b)):
        dy = {round(abs(P[b, 1] - P[a, 1]), 12) for a, b in band_edges(spec)[name]}
        assert dy == {round(s, 12)}


@pytest.mark.parametrize("t,delta", [(1.5, 0.2), (1.2, 0.3), (1.9, 0.05)])
def test_vertex_angles_in_window(t, delta):
    ang = band_vertex_angles(ArrangementSpec(t, delta, 30))
    assert len(ang) == 3 * 28
    assert all(60 < a < 120 for a in ang)


def test_thresholds_hand_arithmetic():
    assert thresholds(2, 0.1) == pytest.approx((2 * 3 / 0.2, 9 * 2 * (2.1**2 - 1) / 0.2), rel=1e-12)
    assert thresholds(2, 0.1) == pytest.approx((30, 306.9), abs=1e-9)
    assert thresholds(1.5, 0.2) == pytest.approx((4.6875, 63.7875), abs=1e-9)
    # the lower threshold falls like 1/delta; the upper one only while
    # delta < sqrt(t^2-1), where d/d(delta) of ((t+delta)^2-1)/delta changes sign
    lo = [thresholds(1.5, d)[0] for d in (0.01, 0.1, 1, 10, 100)]
    assert all(a > b for a, b in zip(lo, lo[1:])) and lo[-1] < 0.01
    hi = [thresholds(1.5, d)[1] for d in (0.01, 0.1, 0.5, 1.0, 1.1)]
    assert all(a > b for a, b in zip(hi, hi[1:]))
    assert thresholds(1.5, 100)[1] > thresholds(1.5, 10)[1] > thresholds(1.5, 1.2)[1]
    with pytest.raises(InvalidParams):
        thresholds(1.5, 0)


def test_no_extra_edges_inside_outer_bands():
    spec = ArrangementSpec(1.5, 0.2, 60)
    g = greedy_spanner_naive(three_band_arrangement(spec), SpannerConfig(1.5))
    E = {(i, j) for i, j, _ in g.edges}
    for name in ("U", "B"):
        members = set(band_chains(spec)[name])
        own = set(band_edges(spec)[name])
        assert own <= E
        assert {e for e in E if e[0] in members and e[1] in members} == own


def test_fast_matches_naive_on_small_arrangements():
    for cols in (10, 25, 40):
        P = three_band_arrangement(ArrangementSpec(1.5, 0.2, cols))
        assert greedy_spanner_fast(P, SpannerConfig(1.5)).edges == greedy_spanner_naive(P, SpannerConfig(1.5)).edges


def test_no_long_edge_below_threshold():
    spec = ArrangementSpec(1.5, 0.2, 4)
    g = greedy_spanner_naive(three_band_arrangement(spec), SpannerConfig(1.5))
    with pytest.raises(NoLongEdge):
        analyze_long_edge(g, spec)


def test_analyze_rejects_foreign_graph():
    spec = ArrangementSpec(1.5, 0.2, 10)
    g = greedy_spanner_naive(zigzag_points(ZigZagSpec(s=1, count=5)), SpannerConfig(1.5))
    with pytest.raises(InvalidParams):
        analyze_long_edge(g, spec)


def test_long_edge_counts_frozen():
    fx = load_fixture("adversarial.json")
    prev = -1
    for row in fx["runs"]:
        spec = ArrangementSpec(row["t"], row["delta"], row["columns"])
        g = greedy_spanner_naive(three_band_arrangement(spec), SpannerConfig(spec.t))
        r = analyze_long_edge(g, spec)
        assert (list(r.edge), r.column_gap, r.middle_crossings) == (row["edge"], row["column_gap"], row["middle_crossings"])
        assert r.middle_crossings >= r.column_gap - 2
        assert r.middle_crossings > prev
        prev = r.middle_crossings
        assert max(middle_crossing_counts(g, spec).values()) == r.middle_crossings
