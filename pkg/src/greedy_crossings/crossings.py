"""Crossing graph of a straight-line spanner drawing, degeneracy, and the
closed-form crossing bounds together with empirical checks of the
structural properties behind them."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial import cKDTree

from . import _backend
from .errors import CoincidentCrossings, InvalidParams, UnknownEdge
from .geometry import cross_xy, line_angle_xy
from .spanner import VERIFY_TOL, SpannerGraph

# Two crossing points closer than this fraction of the drawing's diameter
# are treated as the same point.
COINCIDENT_REL = 1e-12


@dataclass(frozen=True)
class CrossingGraph:
    """Nodes are spanner edge ids; two nodes are adjacent iff the edges cross."""

    nodes: tuple
    adjacency: tuple
    crossing_points: dict

    @property
    def num_crossings(self) -> int:
        return len(self.crossing_points)

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.crossing_points)

    def degree(self, e: int) -> int:
        return len(self.adjacency[e])


def _segment_arrays(g: SpannerGraph):
    xy = g.points.xy
    pairs = g.pairs()
    if len(pairs) == 0:
        z = np.zeros(0)
        return z, z, z, z
    return xy[pairs[:, 0], 0], xy[pairs[:, 0], 1], xy[pairs[:, 1], 0], xy[pairs[:, 1], 1]


def _crossing_points(x1, y1, x2, y2, ii, jj) -> np.ndarray:
    rx, ry = x2[ii] - x1[ii], y2[ii] - y1[ii]
    sx, sy = x2[jj] - x1[jj], y2[jj] - y1[jj]
    qx, qy = x1[jj] - x1[ii], y1[jj] - y1[ii]
    lam = (qx * sy - qy * sx) / (rx * sy - ry * sx)
    return np.column_stack([x1[ii] + lam * rx, y1[ii] + lam * ry])


def build_crossing_graph(g: SpannerGraph, kernels=None) -> CrossingGraph:
    """All-pairs crossing scan.

    Raises DegenerateOverlap for collinear overlapping edges and
    CoincidentCrossings when two different crossings land on (numerically)
    the same point.
    """
    kernels = kernels or _backend.kernels
    m = g.m
    x1, y1, x2, y2 = _segment_arrays(g)
    ii, jj, status = kernels.crossing_candidates(x1, y1, x2, y2)
    keep = status == 1
    for k in np.nonzero(status == 2)[0]:
        i, j = int(ii[k]), int(jj[k])
        keep[k] = cross_xy((x1[i], y1[i]), (x2[i], y2[i]), (x1[j], y1[j]), (x2[j], y2[j]))
    ii, jj = ii[keep], jj[keep]
    order = np.lexsort((jj, ii))
    ii, jj = ii[order], jj[order]
    pts = _crossing_points(x1, y1, x2, y2, ii, jj) if len(ii) else np.zeros((0, 2))
    if len(pts) > 1:
        r = COINCIDENT_REL * max(g.points.diameter(), 1e-300)
        close = cKDTree(pts).query_pairs(r)
        if close:
            a, b = min(close)
            raise CoincidentCrossings(
                f"crossings of edges {ii[a]},{jj[a]} and {ii[b]},{jj[b]} coincide near "
                f"({pts[a, 0]!r}, {pts[a, 1]!r})"
            )
    adj: list[list[int]] = [[] for _ in range(m)]
    points = {}
    for k, (i, j) in enumerate(zip(ii.tolist(), jj.tolist())):
        adj[i].append(j)
        adj[j].append(i)
        points[(i, j)] = (float(pts[k, 0]), float(pts[k, 1]))
    return CrossingGraph(tuple(range(m)), tuple(tuple(sorted(a)) for a in adj), points)


def degeneracy(cg: CrossingGraph) -> tuple[int, list[int]]:
    """Exact degeneracy by repeatedly removing a minimum-degree node.

    Returns ``(k, order)``; in ``order`` every node has at most ``k``
    neighbours that come after it.
    """
    n = len(cg.adjacency)
    if n == 0:
        return 0, []
    deg = [len(a) for a in cg.adjacency]
    maxdeg = max(deg)
    buckets: list[set] = [set() for _ in range(maxdeg + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    removed = [False] * n
    order = []
    k = 0
    lo = 0
    for _ in range(n):
        while not buckets[lo]:
            lo += 1
        v = min(buckets[lo])
        buckets[lo].discard(v)
        k = max(k, lo)
        removed[v] = True
        order.append(v)
        for u in cg.adjacency[v]:
            if not removed[u]:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)
        lo = max(lo - 1, 0)
    return k, order


def later_neighbor_counts(cg: CrossingGraph, order: list[int]) -> list[int]:
    """For each position in ``order``, neighbours appearing later."""
    pos = {v: i for i, v in enumerate(order)}
    return [sum(1 for u in cg.adjacency[v] if pos[u] > pos[v]) for v in order]


# ---------------------------------------------------------------------------
# closed-form bounds


@dataclass(frozen=True)
class AngleBucketConfig:
    theta: float

    def __post_init__(self):
        if not (math.isfinite(self.theta) and self.theta > 0):
            raise InvalidParams(f"theta must be positive, got {self.theta!r}")

    def check_ordering_range(self, t: float) -> None:
        if not self.theta < ordering_theta_limit(t):
            raise InvalidParams(
                f"theta={self.theta} must be below (t-1)/(2(t+1)) = {ordering_theta_limit(t)}"
            )

    def bucket(self, angle: float) -> int:
        return int(angle // self.theta)


@dataclass(frozen=True)
class BandParams:
    alpha: float
    beta: float
    epsilon: float = 1.0

    def __post_init__(self):
        if not (0 < self.alpha <= self.beta and math.isfinite(self.beta)):
            raise InvalidParams(f"need 0 < alpha <= beta, got {self.alpha}, {self.beta}")
        if not self.epsilon > 0:
            raise InvalidParams("epsilon must be positive")


@dataclass(frozen=True)
class BoundReport:
    c1: float
    c2: float
    total: float


def _check_t(t: float) -> None:
    if not (math.isfinite(t) and t > 1):
        raise InvalidParams(f"stretch factor must be > 1, got {t!r}")


def ordering_theta_limit(t: float) -> float:
    return (t - 1) / (2 * (t + 1))


def long_ratio(t: float) -> float:
    """Length ratio above which crossing edges are handled by angle classes."""
    _check_t(t)
    return 3 * t * (t + 1) / (t - 1)


def bound_long_parallel(t: float, theta: float) -> float:
    """Cap on crossings of one edge by much longer, mutually θ-parallel edges."""
    _check_t(t)
    if not theta > 0:
        raise InvalidParams("theta must be positive")
    denom = (t - 1 - 2 * math.sin(theta / 2)) * math.cos(theta)
    if not denom > 0:
        raise InvalidParams(f"t={t}, theta={theta}: denominator is not positive")
    return 4 * t / denom + 1


def bound_band(t: float, p: BandParams) -> float:
    """Cap on crossings of AB by edges with length in [alpha|AB|, beta|AB|]."""
    _check_t(t)
    a, b = p.alpha, p.beta
    return (2 * b * (2 * b + 1) / a**2 * 8 * t**2 / (t - 1) ** 2) ** 2


def bound_total_not_smaller(t: float, epsilon: float = 1.0) -> BoundReport:
    """Cap on crossings of an edge AB by edges of length at least epsilon*|AB|."""
    _check_t(t)
    if not (math.isfinite(epsilon) and epsilon > 0):
        raise InvalidParams("epsilon must be positive")
    theta = ordering_theta_limit(t) * (1 - 1e-6)
    c1 = bound_long_parallel(t, theta) * math.ceil(math.pi / theta)
    R = long_ratio(t)
    if epsilon > R:
        # Only the long-parallel regime is left.
        c2 = 0.0
    else:
        c2 = bound_band(t, BandParams(epsilon, R, epsilon))
    return BoundReport(c1, c2, c1 + c2)


# ---------------------------------------------------------------------------
# per-edge crossing profile

BAND_NAMES = ("below_epsilon", "shorter", "comparable", "long")


@dataclass(frozen=True)
class CrossingProfile:
    edge: int
    length: float
    bands: tuple  # ratio cut points (epsilon, 1, R)
    band_counts: dict
    angle_buckets: dict
    longer_count: int

    @property
    def total(self) -> int:
        return sum(self.band_counts.values())


def _resolve_t(g: SpannerGraph, t):
    t = g.t if t is None else t
    if t is None:
        raise InvalidParams("stretch factor unknown; pass t explicitly")
    _check_t(t)
    return float(t)


def crossing_profile(
    g: SpannerGraph,
    edge: int,
    cfg: AngleBucketConfig,
    t: float | None = None,
    epsilon: float = 1e-3,
    cg: CrossingGraph | None = None,
) -> CrossingProfile:
    """Classify the edges crossing ``edge`` by length ratio |PQ|/|AB|.

    Bands are [0, eps), [eps, 1), [1, R) and [R, inf) with
    R = 3t(t+1)/(t-1); the last band is further split by line angle into
    buckets of width ``cfg.theta``.
    """
    if not 0 <= edge < g.m:
        raise UnknownEdge(edge)
    t = _resolve_t(g, t)
    if not epsilon > 0:
        raise InvalidParams("epsilon must be positive")
    cg = cg or build_crossing_graph(g)
    R = long_ratio(t)
    xy = g.points.xy
    length = g.edges[edge][2]
    counts = dict.fromkeys(BAND_NAMES, 0)
    buckets: dict[int, int] = {}
    longer = 0
    for f in cg.adjacency[edge]:
        i, j, w = g.edges[f]
        ratio = w / length
        if ratio >= 1:
            longer += 1
        if ratio < epsilon:
            counts["below_epsilon"] += 1
        elif ratio < 1:
            counts["shorter"] += 1
        elif ratio < R:
            counts["comparable"] += 1
        else:
            counts["long"] += 1
            b = cfg.bucket(line_angle_xy(xy[i], xy[j]))
            buckets[b] = buckets.get(b, 0) + 1
    return CrossingProfile(edge, length, (epsilon, 1.0, R), counts, dict(sorted(buckets.items())), longer)


def longer_crossing_counts(g: SpannerGraph, cg: CrossingGraph | None = None) -> np.ndarray:
    """Per edge, the number of crossing edges at least as long as it."""
    cg = cg or build_crossing_graph(g)
    w = g.lengths()
    out = np.zeros(g.m, dtype=np.int64)
    for e, nb in enumerate(cg.adjacency):
        if nb:
            out[e] = int(np.count_nonzero(w[list(nb)] >= w[e]))
    return out


# ---------------------------------------------------------------------------
# empirical checks of the structural properties


@dataclass(frozen=True)
class GapReport:
    worst_ratio: float
    threshold: float
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def _pair_blocks(m: int, block: int = 512):
    for i0 in range(0, m, block):
        i1 = min(m, i0 + block)
        I = np.arange(i0, i1)[:, None]
        J = np.arange(m)[None, :]
        ii, jj = np.nonzero(J > I)
        yield ii + i0, jj


def verify_gap_property(g: SpannerGraph, t: float | None = None) -> GapReport:
    """Endpoint-distance lower bound between any two spanner edges.

    For edges MN and PQ, each of the two endpoint matchings must satisfy
    max(|MP|, |NQ|) >= (t-1)/(2t) * min(|MN|, |PQ|). ``worst_ratio`` is the
    smallest max(|MP|, |NQ|) / min(|MN|, |PQ|) seen.
    """
    t = _resolve_t(g, t)
    thr = (t - 1) / (2 * t)
    m = g.m
    if m < 2:
        return GapReport(math.inf, thr, ())
    xy = g.points.xy
    P = g.pairs()
    A, B = xy[P[:, 0]], xy[P[:, 1]]
    w = g.lengths()
    worst = math.inf
    bad = []
    for ii, jj in _pair_blocks(m):
        short = np.minimum(w[ii], w[jj])
        for C, D in ((A, B), (B, A)):
            d1 = np.linalg.norm(A[ii] - C[jj], axis=1)
            d2 = np.linalg.norm(B[ii] - D[jj], axis=1)
            ratio = np.maximum(d1, d2) / short
            worst = min(worst, float(ratio.min()))
            hit = np.nonzero(ratio < thr * (1 - VERIFY_TOL))[0]
            bad.extend((int(ii[k]), int(jj[k])) for k in hit)
    return GapReport(worst, thr, tuple(sorted(set(bad))))


@dataclass(frozen=True)
class LowerBoundReport:
    theta: float
    worst_ratio: float
    threshold: float
    pairs_checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_parallel_lower_bound(g: SpannerGraph, t: float | None = None, theta: float | None = None) -> LowerBoundReport:
    """Distance between nearly parallel spanner edges.

    For every pair of edges whose lines meet at an angle <= theta
    (default (t-1)/4), match endpoints so the two edges point the same way
    and require min(|MP|, |NQ|) >= (t-1-2 sin(theta/2))/(2t) * min(|MN|, |PQ|).
    """
    t = _resolve_t(g, t)
    theta = (t - 1) / 4 if theta is None else theta
    thr = (t - 1 - 2 * math.sin(theta / 2)) / (2 * t)
    m = g.m
    if m < 2:
        return LowerBoundReport(theta, math.inf, thr, 0, ())
    xy = g.points.xy
    P = g.pairs()
    A, B = xy[P[:, 0]], xy[P[:, 1]]
    U = B - A
    w = g.lengths()
    ang = np.array([line_angle_xy(a, b) for a, b in zip(A, B)])
    worst = math.inf
    bad = []
    checked = 0
    for ii, jj in _pair_blocks(m):
        diff = np.abs(ang[ii] - ang[jj])
        diff = np.minimum(diff, math.pi - diff)
        sel = diff <= theta
        ii, jj = ii[sel], jj[sel]
        if ii.size == 0:
            continue
        checked += ii.size
        aligned = np.einsum("ij,ij->i", U[ii], U[jj]) > 0
        C = np.where(aligned[:, None], A[jj], B[jj])
        D = np.where(aligned[:, None], B[jj], A[jj])
        d1 = np.linalg.norm(A[ii] - C, axis=1)
        d2 = np.linalg.norm(B[ii] - D, axis=1)
        ratio = np.minimum(d1, d2) / np.minimum(w[ii], w[jj])
        worst = min(worst, float(ratio.min()))
        hit = np.nonzero(ratio < thr * (1 - VERIFY_TOL))[0]
        bad.extend((int(ii[k]), int(jj[k])) for k in hit)
    return LowerBoundReport(theta, worst, thr, checked, tuple(sorted(bad)))


@dataclass(frozen=True)
class OrderingReport:
    edge: int
    qualifying: int
    classes: int
    nested_pairs: tuple

    @property
    def ordered(self) -> bool:
        return not self.nested_pairs


def verify_endpoint_ordering(
    g: SpannerGraph,
    edge: int,
    cfg: AngleBucketConfig,
    t: float | None = None,
    cg: CrossingGraph | None = None,
) -> OrderingReport:
    """Look for nested projections among long, nearly parallel crossers of ``edge``.

    Only edges crossing ``edge`` that are at least R = 3t(t+1)/(t-1) times
    longer qualify. They are grouped by line angle into classes of width
    ``cfg.theta``; within a class every edge is projected onto the one with
    the smallest line angle, and pairs whose projection intervals are
    strictly nested are reported.
    """
    if not 0 <= edge < g.m:
        raise UnknownEdge(edge)
    t = _resolve_t(g, t)
    cfg.check_ordering_range(t)
    cg = cg or build_crossing_graph(g)
    R = long_ratio(t)
    xy = g.points.xy
    base_len = g.edges[edge][2]
    classes: dict[int, list[tuple[float, int]]] = {}
    for f in cg.adjacency[edge]:
        i, j, w = g.edges[f]
        if w >= R * base_len:
            ang = line_angle_xy(xy[i], xy[j])
            classes.setdefault(cfg.bucket(ang), []).append((ang, f))
    nested = []
    qualifying = 0
    for members in classes.values():
        qualifying += len(members)
        if len(members) < 2:
            continue
        members.sort()
        bi, bj, _ = g.edges[members[0][1]]
        o = xy[bi]
        u = xy[bj] - o
        u = u / math.sqrt(u[0] * u[0] + u[1] * u[1])
        iv = {}
        for _, f in members:
            i, j, _ = g.edges[f]
            pa = float((xy[i] - o) @ u)
            pb = float((xy[j] - o) @ u)
            iv[f] = (min(pa, pb), max(pa, pb))
        fs = sorted(iv)
        for x in range(len(fs)):
            for y in range(x + 1, len(fs)):
                (l1, h1), (l2, h2) = iv[fs[x]], iv[fs[y]]
                if (l1 < l2 and h2 < h1) or (l2 < l1 and h1 < h2):
                    nested.append((fs[x], fs[y]))
    return OrderingReport(edge, qualifying, len(classes), tuple(nested))
