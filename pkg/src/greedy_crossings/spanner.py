"""Greedy t-spanner construction and verification of its defining properties."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path as _csgraph_shortest_path

from . import _backend
from .errors import DuplicatePoints, InvalidParams, InvalidStretch, UnknownVertex
from .geometry import PointSet

# A pair is joined iff d_S > t * d * (1 + GREEDY_TOL).
GREEDY_TOL = 1e-12
VERIFY_TOL = 1e-9

TIE_BREAKS = ("ids", "reversed-ids")


@dataclass(frozen=True)
class SpannerConfig:
    t: float
    tie_break: str = "ids"

    def __post_init__(self):
        if not (isinstance(self.t, (int, float)) and math.isfinite(self.t) and self.t > 1):
            raise InvalidStretch(f"stretch factor must be > 1, got {self.t!r}")
        if self.tie_break not in TIE_BREAKS:
            raise InvalidParams(f"unknown tie_break {self.tie_break!r}; expected one of {TIE_BREAKS}")


@dataclass(frozen=True, eq=False)
class SpannerGraph:
    """Straight-line embedded graph.

    ``edges`` holds canonical ``(i, j, length)`` triples with ``i < j``; the
    position of an edge in this tuple is its edge id. ``t`` records the
    stretch factor for graphs produced by a greedy builder.
    """

    points: PointSet
    edges: tuple
    t: float | None = None
    adjacency: tuple = field(init=False, repr=False)

    def __post_init__(self):
        n = len(self.points)
        adj: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for i, j, _ in self.edges:
            if not (0 <= i < j < n):
                raise InvalidParams(f"edge ({i}, {j}) is not canonical or out of range")
            if (i, j) in seen:
                raise InvalidParams(f"duplicate edge ({i}, {j})")
            seen.add((i, j))
            adj[i].append(j)
            adj[j].append(i)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(a)) for a in adj))

    @classmethod
    def from_pairs(cls, points, pairs: Iterable[tuple[int, int]], t: float | None = None) -> "SpannerGraph":
        if not isinstance(points, PointSet):
            points = PointSet(points)
        xy = points.xy
        edges = []
        for i, j in pairs:
            i, j = (int(i), int(j)) if i < j else (int(j), int(i))
            dx = xy[j, 0] - xy[i, 0]
            dy = xy[j, 1] - xy[i, 1]
            edges.append((i, j, math.sqrt(dx * dx + dy * dy)))
        return cls(points, tuple(edges), t)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def m(self) -> int:
        return len(self.edges)

    def edge_set(self) -> frozenset:
        return frozenset((i, j) for i, j, _ in self.edges)

    def pairs(self) -> np.ndarray:
        return np.array([(i, j) for i, j, _ in self.edges], dtype=np.int64).reshape(-1, 2)

    def lengths(self) -> np.ndarray:
        return np.array([w for _, _, w in self.edges], dtype=np.float64)

    def weighted_adjacency(self) -> list[list[tuple[int, float, int]]]:
        """Per-vertex ``(neighbor, length, edge id)`` lists."""
        adj: list[list[tuple[int, float, int]]] = [[] for _ in range(self.n)]
        for e, (i, j, w) in enumerate(self.edges):
            adj[i].append((j, w, e))
            adj[j].append((i, w, e))
        return adj

    def csr(self) -> csr_matrix:
        pairs = self.pairs()
        w = self.lengths()
        rows = np.concatenate([pairs[:, 0], pairs[:, 1]])
        cols = np.concatenate([pairs[:, 1], pairs[:, 0]])
        return csr_matrix((np.concatenate([w, w]), (rows, cols)), shape=(self.n, self.n))

    def total_weight(self) -> float:
        return float(math.fsum(w for _, _, w in self.edges))

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def induced(self, vertices: Iterable[int]) -> tuple["SpannerGraph", list[int]]:
        """Induced subgraph, relabelled; also returns local-to-global ids."""
        glob = sorted(set(vertices))
        local = {v: k for k, v in enumerate(glob)}
        sub_edges = tuple(
            (local[i], local[j], w) for i, j, w in self.edges if i in local and j in local
        )
        return SpannerGraph(PointSet(self.points.xy[glob]), sub_edges, self.t), glob


def sorted_pairs(points: PointSet, tie_break: str = "ids"):
    """All pairs ``i < j`` ordered by (distance, tie-break on ids)."""
    n = len(points)
    if n < 2:
        e = np.zeros(0, dtype=np.int64)
        return e, e.copy(), np.zeros(0)
    xy = points.xy
    pi, pj = np.triu_indices(n, k=1)
    pi = pi.astype(np.int64)
    pj = pj.astype(np.int64)
    dx = xy[pj, 0] - xy[pi, 0]
    dy = xy[pj, 1] - xy[pi, 1]
    pd = np.sqrt(dx * dx + dy * dy)
    del dx, dy
    if tie_break == "ids":
        order = np.lexsort((pj, pi, pd))
    else:
        order = np.lexsort((-pj, -pi, pd))
    return pi[order], pj[order], pd[order]


def _check_input(points, cfg: SpannerConfig) -> PointSet:
    if not isinstance(points, PointSet):
        points = PointSet(points)
    if len(points) < 1:
        raise InvalidParams("need at least one point")
    if points.has_duplicates():
        raise DuplicatePoints("point set contains duplicate coordinates")
    return points


def _build(points, cfg: SpannerConfig, kernel_name: str, kernels=None) -> SpannerGraph:
    points = _check_input(points, cfg)
    kernels = kernels or _backend.kernels
    pi, pj, pd = sorted_pairs(points, cfg.tie_break)
    ei, ej = getattr(kernels, kernel_name)(len(points), pi, pj, pd, float(cfg.t), GREEDY_TOL)[:2]
    return SpannerGraph.from_pairs(points, zip(ei.tolist(), ej.tolist()), t=float(cfg.t))


def greedy_spanner_naive(points, cfg: SpannerConfig, kernels=None) -> SpannerGraph:
    """Greedy spanner with an exact shortest-path query for every pair."""
    return _build(points, cfg, "greedy_naive", kernels)


def greedy_spanner_fast(points, cfg: SpannerConfig, kernels=None) -> SpannerGraph:
    """Same output as :func:`greedy_spanner_naive` with far fewer searches.

    Distances found by earlier searches are kept as upper bounds in an
    ``n x n`` table (they can only shrink as edges are added), so most pairs
    are rejected by a lookup. An undecided pair refreshes the whole row of P
    with one single-source search, unless the row of P or Q is already exact
    because no edge was inserted since it was filled.
    """
    return _build(points, cfg, "greedy_fast", kernels)


def _dijkstra(adj, src, dst=None, skip_edge=-1):
    dist = {src: 0.0}
    prev = {src: -1}
    heap = [(0.0, src)]
    done = set()
    while heap:
        d, u = heapq.heappop(heap)
        if u in done:
            continue
        done.add(u)
        if u == dst:
            break
        for v, w, e in adj[u]:
            if e == skip_edge:
                continue
            nd = d + w
            if v not in dist or nd < dist[v]:
                dist[v] = nd
                prev[v] = u
                heapq.heappush(heap, (nd, v))
    return dist, prev


def shortest_path(g: SpannerGraph, u: int, v: int) -> tuple[float, list[int]]:
    for x in (u, v):
        if not 0 <= x < g.n:
            raise UnknownVertex(x)
    if u == v:
        return 0.0, [u]
    dist, prev = _dijkstra(g.weighted_adjacency(), u, v)
    if v not in dist:
        return math.inf, []
    path = [v]
    while path[-1] != u:
        path.append(prev[path[-1]])
    return dist[v], path[::-1]


@dataclass(frozen=True)
class StretchReport:
    max_observed_ratio: float
    violating_pairs: tuple

    @property
    def ok(self) -> bool:
        return not self.violating_pairs


def verify_stretch(g: SpannerGraph, t: float) -> StretchReport:
    """All-pairs check of d_S(P,Q) <= t * d(P,Q)."""
    n = g.n
    if n < 2:
        return StretchReport(1.0, ())
    ds = _csgraph_shortest_path(g.csr(), method="D", directed=False)
    xy = g.points.xy
    pi, pj = np.triu_indices(n, k=1)
    dx = xy[pj, 0] - xy[pi, 0]
    dy = xy[pj, 1] - xy[pi, 1]
    d = np.sqrt(dx * dx + dy * dy)
    ratio = ds[pi, pj] / d
    bad = np.nonzero(ratio > t * (1 + VERIFY_TOL))[0]
    return StretchReport(
        float(ratio.max()), tuple((int(pi[k]), int(pj[k])) for k in bad)
    )


@dataclass(frozen=True)
class ShortcutReport:
    worst_margin: float
    violating_edges: tuple

    @property
    def ok(self) -> bool:
        return not self.violating_edges


def verify_no_shortcut(g: SpannerGraph, t: float) -> ShortcutReport:
    """Flag edges AB with an alternative A-B path of length <= t*|AB|."""
    adj = g.weighted_adjacency()
    worst = math.inf
    bad = []
    for e, (a, b, w) in enumerate(g.edges):
        dist, _ = _dijkstra(adj, a, b, skip_edge=e)
        alt = dist.get(b, math.inf)
        worst = min(worst, alt / (t * w))
        if alt <= t * w * (1 + VERIFY_TOL):
            bad.append((a, b))
    return ShortcutReport(worst, tuple(bad))
