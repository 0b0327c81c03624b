"""Zig-zag point sets and the three-band arrangement that forces a single
spanner edge to cross many others."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .crossings import build_crossing_graph
from .errors import ConstructionError, InvalidParams, NoLongEdge
from .geometry import PointSet, cross_xy
from .spanner import SpannerGraph

T_MIN = math.sqrt(4.0 / 3.0)
T_MAX = 2.0


@dataclass(frozen=True)
class ZigZagSpec:
    origin: tuple = (0.0, 0.0)
    dx: float = 1.0
    s: float = 0.0
    count: int = 2
    direction: tuple = (1.0, 0.0)

    def __post_init__(self):
        if not (self.dx > 0 and math.isfinite(self.dx)):
            raise InvalidParams("dx must be positive")
        if not (self.s >= 0 and math.isfinite(self.s)):
            raise InvalidParams("s must be nonnegative")
        if not (isinstance(self.count, int) and self.count >= 2):
            raise InvalidParams("count must be an integer >= 2")
        norm = math.hypot(*self.direction)
        if not abs(norm - 1.0) < 1e-12:
            raise InvalidParams("direction must be a unit vector")


def zigzag_points(spec: ZigZagSpec) -> PointSet:
    """P_i = P_0 + i*dx*u + (i mod 2)*s*dx*u_perp, u_perp = u rotated by +90 degrees."""
    ux, uy = spec.direction
    px, py = -uy, ux
    ox, oy = spec.origin
    h = spec.s * spec.dx
    out = []
    for i in range(spec.count):
        a = i * spec.dx
        b = h if i % 2 else 0.0
        out.append((ox + a * ux + b * px, oy + a * uy + b * py))
    return PointSet(out)


def zigzag_is_spanner(s: float, t: float) -> bool:
    """Whether the zig-zag path with stretch s is a t-spanner of its points."""
    if not t > 1:
        raise InvalidParams("t must be > 1")
    if not s >= 0:
        raise InvalidParams("s must be nonnegative")
    return s <= math.sqrt(t * t - 1)


def stretch_for(t: float) -> float:
    """Largest zig-zag stretch that still gives a t-spanner."""
    return math.sqrt(t * t - 1)


def vertex_angle(s: float) -> float:
    """Interior angle (radians) at a zig-zag vertex with stretch s."""
    return math.acos((s * s - 1) / (s * s + 1))


def angle_window_ok(t: float, delta: float) -> bool:
    """All three zig-zags have vertex angles strictly inside (60, 120) degrees.

    |cos| = |s^2 - 1| / (s^2 + 1) < 1/2 holds iff 1/3 < s^2 < 3, i.e. for the
    top/bottom bands iff 4/3 < t^2 < 4 and for the middle iff t + delta < 2.
    """
    for tt in (t, t + delta):
        s2 = tt * tt - 1
        if not abs(s2 - 1) / (s2 + 1) < 0.5:
            return False
    return True


@dataclass(frozen=True)
class ArrangementSpec:
    t: float = 1.5
    delta: float = 0.2
    columns: int = 200
    dx: float = 1.0

    def __post_init__(self):
        if not (self.delta > 0 and math.isfinite(self.delta)):
            raise InvalidParams("delta must be positive")
        if not (self.dx > 0 and math.isfinite(self.dx)):
            raise InvalidParams("dx must be positive")
        if not (isinstance(self.columns, int) and self.columns >= 2):
            raise InvalidParams("columns must be an integer >= 2")
        if not (T_MIN < self.t and self.t + self.delta < T_MAX and angle_window_ok(self.t, self.delta)):
            raise InvalidParams(
                f"need sqrt(4/3) < t and t + delta < 2 for the vertex-angle window; got t={self.t}, delta={self.delta}"
            )

    @property
    def s_u(self) -> float:
        return stretch_for(self.t)

    @property
    def s_m(self) -> float:
        return stretch_for(self.t + self.delta)

    @property
    def s_b(self) -> float:
        return stretch_for(self.t)

    def row_y(self) -> tuple[float, float, float, float]:
        su, sm, sb = self.s_u * self.dx, self.s_m * self.dx, self.s_b * self.dx
        return (0.0, -su, -(su + sm), -(su + sm + sb))

    @property
    def height(self) -> float:
        return -self.row_y()[3]


@dataclass(frozen=True)
class ArrangementLayout:
    """Row (1..4, top to bottom) and column of every point id."""

    rows: np.ndarray
    cols: np.ndarray

    def ids_in_row(self, r: int) -> np.ndarray:
        return np.nonzero(self.rows == r)[0]


def arrangement_layout(spec: ArrangementSpec) -> ArrangementLayout:
    # column c holds ids 2c (upper) and 2c+1 (lower); odd columns use rows
    # 1 and 3, even columns rows 2 and 4
    c = np.repeat(np.arange(spec.columns), 2)
    odd = c % 2 == 1
    upper = np.arange(2 * spec.columns) % 2 == 0
    rows = np.where(odd, np.where(upper, 1, 3), np.where(upper, 2, 4))
    return ArrangementLayout(rows.astype(np.int64), c.astype(np.int64))


def three_band_arrangement(spec: ArrangementSpec) -> PointSet:
    lay = arrangement_layout(spec)
    ys = spec.row_y()
    xy = np.column_stack([lay.cols * spec.dx, [ys[r - 1] for r in lay.rows]])
    return PointSet(xy)


def band_chains(spec: ArrangementSpec) -> dict[str, list[int]]:
    """Point ids of the zig-zags U, M and B, left to right."""
    # row used on even / odd columns
    rows_of = {"U": (2, 1), "M": (2, 3), "B": (4, 3)}
    out = {}
    for name, (re, ro) in rows_of.items():
        out[name] = [2 * c + (0 if (re if c % 2 == 0 else ro) <= 2 else 1) for c in range(spec.columns)]
    return out


def band_edges(spec: ArrangementSpec) -> dict[str, list[tuple[int, int]]]:
    """Consecutive-point edges of the three zig-zags."""
    return {k: [(min(a, b), max(a, b)) for a, b in zip(ch, ch[1:])] for k, ch in band_chains(spec).items()}


def band_vertex_angles(spec: ArrangementSpec) -> list[float]:
    """Interior angles (degrees) at every inner vertex of U, M and B."""
    xy = three_band_arrangement(spec).xy
    out = []
    for chain in band_chains(spec).values():
        for p, q, r in zip(chain, chain[1:], chain[2:]):
            v1 = xy[p] - xy[q]
            v2 = xy[r] - xy[q]
            c = float(v1 @ v2) / (np.linalg.norm(v1) * np.linalg.norm(v2))
            out.append(math.degrees(math.acos(max(-1.0, min(1.0, c)))))
    return out


def thresholds(t: float, delta: float) -> tuple[float, float]:
    """(column gap below which no U-B edge is needed, gap at which one is forced)."""
    if not t > 1:
        raise InvalidParams("t must be > 1")
    if not delta > 0:
        raise InvalidParams("delta must be positive")
    return (t * (t * t - 1) / (2 * delta), 9 * t * ((t + delta) ** 2 - 1) / (2 * delta))


@dataclass(frozen=True)
class LongEdgeReport:
    edge: tuple
    column_gap: int
    middle_crossings: int
    thresholds: tuple
    candidates: int = 1


def analyze_long_edge(g: SpannerGraph, spec: ArrangementSpec) -> LongEdgeReport:
    """Find the U-B spanner edge that crosses the most middle-band edges.

    Only edges from rows 1-2 to rows 3-4 whose column gap exceeds the lower
    threshold are considered.
    """
    lay = arrangement_layout(spec)
    if g.n != len(lay.rows):
        raise InvalidParams("graph does not match the arrangement size")
    lo, hi = thresholds(spec.t, spec.delta)
    xy = g.points.xy
    middle = band_edges(spec)["M"]
    best = None
    n_cand = 0
    for i, j, _ in g.edges:
        ri, rj = lay.rows[i], lay.rows[j]
        if not ((ri <= 2 < rj) or (rj <= 2 < ri)):
            continue
        gap = int(abs(lay.cols[j] - lay.cols[i]))
        if gap <= lo:
            continue
        n_cand += 1
        cmin, cmax = sorted((lay.cols[i], lay.cols[j]))
        hits = 0
        for a, b in middle:
            if cmax < lay.cols[a] or lay.cols[b] < cmin:
                continue
            if cross_xy(xy[i], xy[j], xy[a], xy[b]):
                hits += 1
        key = (hits, gap, -i, -j)
        if best is None or key > best[0]:
            best = (key, (int(i), int(j)), gap, hits)
    if best is None:
        raise NoLongEdge(f"no U-B edge with column gap above {lo:.4g}")
    _, edge, gap, hits = best
    if hits < gap - 2:
        raise ConstructionError(f"edge {edge} spans {gap} columns but crosses only {hits} middle edges")
    return LongEdgeReport(edge, gap, hits, (lo, hi), n_cand)


def middle_crossing_counts(g: SpannerGraph, spec: ArrangementSpec) -> dict:
    """Per spanner edge, how many middle-band edges it crosses (nonzero only)."""
    cg = build_crossing_graph(g)
    eid = {(i, j): k for k, (i, j, _) in enumerate(g.edges)}
    mids = {eid[p] for p in band_edges(spec)["M"] if p in eid}
    out = {}
    for k, nb in enumerate(cg.adjacency):
        c = sum(1 for f in nb if f in mids)
        if c:
            out[g.edges[k][:2]] = c
    return out
