"""Planarization of a spanner drawing and O(sqrt N) planar separators.

The separator engine follows the classical BFS-levels construction: split
at a weighted median level, look for two thin levels around it, and if the
band between them is still too heavy, contract everything above, drop
everything below, triangulate, and cut along a fundamental cycle of the
BFS tree. Side weights of all fundamental cycles are evaluated at once from
subtree sums arranged in rotation order, so each candidate costs O(log N).
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse.csgraph import dijkstra as _csgraph_dijkstra

from .crossings import CrossingGraph, build_crossing_graph
from .errors import ConstructionError, Disconnected, EmbeddingError, InvalidParams, SeparatorBoundExceeded, UnknownVertex
from .geometry import PointSet
from .spanner import SpannerGraph

C_SEP = 4 * math.sqrt(2)
BALANCE = 2.0 / 3.0
_BAL_TOL = 1e-12


# ---------------------------------------------------------------------------
# planarization


@dataclass(frozen=True, eq=False)
class Planarization:
    """Spanner drawing with every crossing replaced by a degree-4 vertex.

    Vertices ``0..n_original-1`` are the spanner's points; the rest are
    dummies. ``edges`` holds ``(u, v, spanner edge id)`` with ``u < v``.
    """

    xy: np.ndarray
    n_original: int
    edges: tuple
    origin_map: dict
    crossing_xy: dict = field(default_factory=dict, repr=False)

    @property
    def N(self) -> int:
        return self.xy.shape[0]

    def is_dummy(self, v: int) -> bool:
        return v >= self.n_original

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.N)]
        for u, v, _ in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for u, w, _ in self.edges if u == v or w == v)

    def as_spanner_graph(self) -> SpannerGraph:
        """The subdivided drawing as a plain embedded graph."""
        return SpannerGraph.from_pairs(PointSet(self.xy), [(u, v) for u, v, _ in self.edges])


def planarize(g: SpannerGraph, cg: CrossingGraph | None = None) -> Planarization:
    """Subdivide every edge at its crossings.

    Dummy ``n + k`` sits on the k-th crossing in ``(e, f)`` order.
    """
    cg = cg or build_crossing_graph(g)
    n = g.n
    xy = g.points.xy
    pairs = cg.pairs()
    dummies = np.array([cg.crossing_points[p] for p in pairs], dtype=np.float64).reshape(-1, 2)
    allxy = np.vstack([xy, dummies]) if len(pairs) else xy.copy()
    allxy.setflags(write=False)
    origin_map = {}
    on_edge: list[list[int]] = [[] for _ in range(g.m)]
    for k, (e, f) in enumerate(pairs):
        origin_map[n + k] = (e, f)
        on_edge[e].append(n + k)
        on_edge[f].append(n + k)
    edges = []
    for e, (i, j, _) in enumerate(g.edges):
        chain = [i]
        if on_edge[e]:
            a = xy[i]
            d = xy[j] - a
            on_edge[e].sort(key=lambda x: float((allxy[x] - a) @ d))
            chain.extend(on_edge[e])
        chain.append(j)
        for u, v in zip(chain, chain[1:]):
            edges.append((min(u, v), max(u, v), e))
    return Planarization(allxy, n, tuple(edges), origin_map, dict(cg.crossing_points))


# ---------------------------------------------------------------------------
# combinatorial embedding
#
# Edge k owns darts 2k (u -> v) and 2k+1 (v -> u). nxt/prv link the darts
# leaving a vertex in counter-clockwise order. The face to the left of dart
# d continues with prv[d ^ 1].


class _Embedding:
    __slots__ = ("nv", "orig", "nxt", "prv", "first")

    def __init__(self, nv: int):
        self.nv = nv
        self.orig: list[int] = []
        self.nxt: list[int] = []
        self.prv: list[int] = []
        self.first = [-1] * nv

    @property
    def ndarts(self) -> int:
        return len(self.orig)

    def head(self, d: int) -> int:
        return self.orig[d ^ 1]

    def add_vertex(self) -> int:
        self.first.append(-1)
        self.nv += 1
        return self.nv - 1

    def _new_edge(self, u: int, v: int) -> int:
        d = len(self.orig)
        self.orig += [u, v]
        self.nxt += [d, d + 1]
        self.prv += [d, d + 1]
        return d

    def _insert_after(self, x: int, y: int) -> None:
        # place dart x right after y (counter-clockwise) at y's origin
        z = self.nxt[y]
        self.nxt[x] = z
        self.prv[x] = y
        self.prv[z] = x
        self.nxt[y] = x

    def _attach(self, x: int, after: int) -> None:
        v = self.orig[x]
        if after < 0:
            self.first[v] = x
        else:
            self._insert_after(x, after)

    def add_edge_after(self, u: int, after_u: int, v: int, after_v: int) -> int:
        """New edge u-v; its darts go right after ``after_u`` / ``after_v`` (-1: isolated)."""
        d = self._new_edge(u, v)
        self._attach(d, after_u)
        self._attach(d + 1, after_v)
        return d

    @classmethod
    def from_rotations(cls, nv: int, ends: list[tuple[int, int]], rotations: list[list[int]]) -> "_Embedding":
        emb = cls(nv)
        for u, v in ends:
            emb._new_edge(u, v)
        for v, rot in enumerate(rotations):
            if not rot:
                continue
            emb.first[v] = rot[0]
            for a, b in zip(rot, rot[1:] + rot[:1]):
                emb.nxt[a] = b
                emb.prv[b] = a
        return emb

    def darts_around(self, v: int) -> list[int]:
        d0 = self.first[v]
        if d0 < 0:
            return []
        out = [d0]
        d = self.nxt[d0]
        while d != d0:
            out.append(d)
            d = self.nxt[d]
        return out

    def faces(self) -> list[list[int]]:
        seen = [False] * self.ndarts
        out = []
        for d0 in range(self.ndarts):
            if seen[d0]:
                continue
            walk = []
            d = d0
            while not seen[d]:
                seen[d] = True
                walk.append(d)
                d = self.prv[d ^ 1]
            out.append(walk)
        return out


def _geometric_embedding(xy: np.ndarray, ends: list[tuple[int, int]]) -> _Embedding:
    nv = xy.shape[0]
    out: list[list[tuple[float, int]]] = [[] for _ in range(nv)]
    for k, (u, v) in enumerate(ends):
        out[u].append((math.atan2(xy[v, 1] - xy[u, 1], xy[v, 0] - xy[u, 0]), 2 * k))
        out[v].append((math.atan2(xy[u, 1] - xy[v, 1], xy[u, 0] - xy[v, 0]), 2 * k + 1))
    rotations = [[d for _, d in sorted(lst)] for lst in out]
    return _Embedding.from_rotations(nv, ends, rotations)


def _components(nv: int, adj: list[list[int]], removed=None) -> list[list[int]]:
    seen = [False] * nv
    if removed is not None:
        for v in removed:
            seen[v] = True
    comps = []
    for s in range(nv):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    stack.append(v)
        comps.append(comp)
    return comps


def check_embedding(p: Planarization) -> _Embedding:
    """Rotation system of the drawing, validated by Euler's formula."""
    ends = [(u, v) for u, v, _ in p.edges]
    emb = _geometric_embedding(p.xy, ends)
    ncomp = len(_components(p.N, p.adjacency()))
    F = len(emb.faces())
    if p.N - len(ends) + F != 1 + ncomp:
        raise EmbeddingError(f"Euler check failed: V={p.N} E={len(ends)} F={F} C={ncomp}")
    return emb


# ---------------------------------------------------------------------------
# separators


@dataclass(frozen=True)
class Separator:
    vertices: frozenset
    side_a: frozenset
    side_b: frozenset
    balance: float

    @property
    def size(self) -> int:
        return len(self.vertices)


def _split_sides(comps: list[list[int]], w: np.ndarray) -> tuple[list[int], list[int]]:
    """Group components into two sides, keeping the heavier side light."""
    cw = [float(w[c].sum()) for c in comps]
    order = sorted(range(len(comps)), key=lambda i: (-cw[i], min(comps[i])))
    total = sum(cw)
    options = []
    # the largest component alone, or a prefix of weight >= total/3
    if order:
        acc, take = 0.0, []
        for i in order:
            take.append(i)
            acc += cw[i]
            if acc >= total / 3:
                break
        options.append(set(take))
    # longest-processing-time two-way assignment
    la, lb, A = 0.0, 0.0, set()
    for i in order:
        if la <= lb:
            A.add(i)
            la += cw[i]
        else:
            lb += cw[i]
    options.append(A)
    best = min(options, key=lambda S: max(sum(cw[i] for i in S), total - sum(cw[i] for i in S)))
    side_a = [v for i in sorted(best) for v in comps[i]]
    side_b = [v for i in range(len(comps)) if i not in best for v in comps[i]]
    return side_a, side_b


def _make_separator(nv: int, adj, w: np.ndarray, sep) -> Separator:
    sep = set(sep)
    comps = _components(nv, adj, sep)
    a, b = _split_sides(comps, w)
    total = float(w.sum())
    heavy = max(float(w[a].sum()) if a else 0.0, float(w[b].sum()) if b else 0.0)
    return Separator(frozenset(sep), frozenset(a), frozenset(b), heavy / total if total > 0 else 0.0)


def _bfs(nv, adj, root):
    level = [-1] * nv
    level[root] = 0
    order = [root]
    q = deque([root])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                order.append(v)
                q.append(v)
    return level, order


def _build_band(emb: _Embedding, level, root, l0, l2, w):
    """Triangulated band of levels strictly between l0 and l2.

    Levels <= l0 are contracted into vertex 0 and levels >= l2 dropped.
    Returns ``(G, weights, real, back)`` where ``back`` maps band vertices
    to drawing vertices (-1 for the contracted root and face centers), or
    None if the band is too small to matter.
    """
    nv = emb.nv
    # BFS tree of the drawing, used for the contraction of the top levels
    par_dart = [-1] * nv
    seen = [False] * nv
    seen[root] = True
    q = deque([root])
    while q:
        u = q.popleft()
        for d in emb.darts_around(u):
            v = emb.head(d)
            if not seen[v]:
                seen[v] = True
                par_dart[v] = d ^ 1
                q.append(v)

    contracted = l0 >= 0
    newid = [-1] * nv
    gw = [0.0]
    real = [not contracted]
    back = [-1 if contracted else root]
    newid[root] = 0
    for v in range(nv):
        if v == root:
            continue
        if level[v] <= l0:
            newid[v] = 0
        elif level[v] < l2:
            newid[v] = len(gw)
            gw.append(float(w[v]))
            real.append(True)
            back.append(v)
    if not contracted:
        gw[0] = float(w[root])
    V = len(gw)
    Wp = sum(gw)
    if V < 3 or Wp <= 0:
        return None

    kept = {}
    ends = []
    for k in range(emb.ndarts // 2):
        a, b = emb.orig[2 * k], emb.orig[2 * k + 1]
        na, nb = newid[a], newid[b]
        if na < 0 or nb < 0 or na == nb:
            continue
        kept[2 * k] = 2 * len(ends)
        kept[2 * k + 1] = 2 * len(ends) + 1
        ends.append((na, nb))

    rotations: list[list[int]] = [[] for _ in range(V)]
    for v in range(nv):
        if newid[v] > 0 or (newid[v] == 0 and not contracted):
            rotations[newid[v]] = [kept[d] for d in emb.darts_around(v) if d in kept]
    if contracted:
        # walk around the contracted subtree, splicing children in place
        out = rotations[0]
        stack = [iter(emb.darts_around(root))]
        while stack:
            d = next(stack[-1], None)
            if d is None:
                stack.pop()
                continue
            x = emb.head(d)
            if level[x] <= l0 and par_dart[x] == d ^ 1:
                ds = emb.darts_around(x)
                i = ds.index(d ^ 1)
                stack.append(iter(ds[i + 1:] + ds[:i]))
            elif d in kept:
                out.append(kept[d])
    G = _Embedding.from_rotations(V, ends, rotations)

    # triangulate every face of length >= 4
    for walk in G.faces():
        k = len(walk)
        if k < 4:
            continue
        verts = [G.orig[d] for d in walk]
        counts: dict[int, int] = {}
        for x in verts:
            counts[x] = counts.get(x, 0) + 1
        start = next((i for i, x in enumerate(verts) if counts[x] == 1), -1)
        if start >= 0:
            walk = walk[start:] + walk[:start]
            verts = verts[start:] + verts[:start]
            prev_chord = walk[0]
            for i in range(2, k - 1):
                c = G.add_edge_after(verts[0], prev_chord, verts[i], walk[i])
                prev_chord = c
        else:
            c = G.add_vertex()
            gw.append(0.0)
            real.append(False)
            back.append(-1)
            prev = -1
            for i in range(k):
                d = G.add_edge_after(c, prev, verts[i], walk[i])
                prev = d
    V = G.nv
    faces = G.faces()
    if V - G.ndarts // 2 + len(faces) != 2 or any(len(f) > 3 for f in faces):
        raise EmbeddingError("triangulated band is not a plane triangulation")
    return G, gw, real, back


def _fundamental_cycles(G: _Embedding, gw, real):
    """Side weights of every fundamental cycle of a BFS tree rooted at 0.

    Returns ``(rows, par)`` with one row ``(k, u, v, lca, left, right, size)``
    per non-tree edge k; ``size`` counts real vertices on the cycle.
    """
    V = G.nv
    Wp = sum(gw)
    # BFS tree of the triangulated band
    pd = [-1] * V
    depth = [-1] * V
    depth[0] = 0
    order = [0]
    q = deque([0])
    tree = set()
    while q:
        u = q.popleft()
        for d in G.darts_around(u):
            v = G.head(d)
            if depth[v] < 0:
                depth[v] = depth[u] + 1
                pd[v] = d ^ 1
                tree.add(d >> 1)
                order.append(v)
                q.append(v)
    par = [G.head(pd[v]) if v else -1 for v in range(V)]
    sub = list(gw)
    for v in reversed(order[1:]):
        sub[par[v]] += sub[v]

    slot = [0] * G.ndarts
    deg = [0] * V
    pre: list[list[float]] = [None] * V  # type: ignore[list-item]
    for v in range(V):
        ds = G.darts_around(v)
        deg[v] = len(ds)
        acc = [0.0]
        for s, d in enumerate(ds):
            slot[d] = s
            x = G.head(d)
            acc.append(acc[-1] + (sub[x] if pd[x] == d ^ 1 else 0.0))
        pre[v] = acc

    def rng(x, s1, s2):
        # child-subtree weight strictly counter-clockwise between slots s1 and s2
        p = pre[x]
        if s1 < s2:
            return p[s2] - p[s1 + 1]
        return p[-1] - p[s1 + 1] + p[s2]

    def between(s, s1, s2, n):
        return s != s1 and (s - s1) % n < (s2 - s1) % n

    A = [0.0] * V
    D = [0.0] * V
    P = [0.0] * V
    R = [0] * V
    P[0], R[0] = gw[0], int(real[0])
    for v in order[1:]:
        x = par[v]
        P[v] = P[x] + gw[v]
        R[v] = R[x] + int(real[v])
        if x:
            ps = slot[pd[x]]
            sv = slot[pd[v] ^ 1]
            D[v] = D[x] + rng(x, sv, ps)
            A[v] = A[x] + rng(x, ps, sv)
        else:
            D[v] = D[x]
            A[v] = A[x]

    LOG = max(1, (max(depth) + 1).bit_length())
    up = [par[:]]
    up[0][0] = 0
    for j in range(1, LOG):
        prevj = up[-1]
        up.append([prevj[prevj[v]] for v in range(V)])

    def ancestor(v, dep):
        diff = depth[v] - dep
        j = 0
        while diff:
            if diff & 1:
                v = up[j][v]
            diff >>= 1
            j += 1
        return v

    def lca(u, v):
        if depth[u] < depth[v]:
            u, v = v, u
        u = ancestor(u, depth[v])
        if u == v:
            return u
        for j in range(LOG - 1, -1, -1):
            if up[j][u] != up[j][v]:
                u, v = up[j][u], up[j][v]
        return par[u]
    rows = []
    for k in range(G.ndarts // 2):
        if k in tree:
            continue
        du, dv = 2 * k, 2 * k + 1
        u, v = G.orig[du], G.orig[dv]
        a = lca(u, v)
        left = 0.0
        if u != a:
            cu = ancestor(u, depth[a] + 1)
            e_out = slot[pd[cu] ^ 1]
            left += rng(u, slot[du], slot[pd[u]]) + D[u] - D[cu]
        else:
            e_out = slot[du]
        if v != a:
            cv = ancestor(v, depth[a] + 1)
            e_in = slot[pd[cv] ^ 1]
            left += rng(v, slot[pd[v]], slot[dv]) + A[v] - A[cv]
        else:
            e_in = slot[dv]
        left += rng(a, e_out, e_in)
        if a and between(slot[pd[a]], e_out, e_in, deg[a]):
            left += Wp - sub[a]
        wc = P[u] + P[v] - 2 * P[a] + gw[a]
        right = Wp - wc - left
        size = R[u] + R[v] - 2 * R[a] + int(real[a])
        rows.append((k, u, v, a, left, right, size))
    return rows, par


def _cycle_candidate(emb: _Embedding, level, root, l0, l2, w):
    """Best fundamental-cycle cut of the band strictly between levels l0 and l2.

    Returns the cycle's original vertex ids, or None when no cycle in the
    triangulated band splits it with both sides <= 2/3 of its weight.
    """
    band = _build_band(emb, level, root, l0, l2, w)
    if band is None:
        return None
    G, gw, real, back = band
    rows, par = _fundamental_cycles(G, gw, real)
    limit = BALANCE * sum(gw) * (1 + _BAL_TOL)
    best = None
    for k, u, v, a, left, right, size in rows:
        if max(left, right) > limit:
            continue
        key = (size, max(left, right), k)
        if best is None or key < best[0]:
            best = (key, u, v, a)
    if best is None:
        return None
    _, u, v, a = best
    cyc = []
    for x in (u, v):
        while x != a:
            cyc.append(x)
            x = par[x]
    cyc.append(a)
    return [back[x] for x in cyc if real[x]]


def planar_separator(p: Planarization, weights=None, root: int = 0, check_bound: bool = True) -> Separator:
    """Balanced separator of a connected plane drawing.

    ``weights`` defaults to 1 per vertex. The result has balance <= 2/3
    and at most ``C_SEP * sqrt(N)`` vertices; otherwise
    SeparatorBoundExceeded is raised.
    """
    N = p.N
    if N == 0:
        raise InvalidParams("empty graph")
    w = np.ones(N) if weights is None else np.asarray(weights, dtype=np.float64)
    if w.shape != (N,) or not np.all(np.isfinite(w)) or np.any(w < 0) or not w.sum() > 0:
        raise InvalidParams("weights must be nonnegative with a positive total, one per vertex")
    adj = p.adjacency()
    if not 0 <= root < N:
        raise UnknownVertex(root)
    level, _ = _bfs(N, adj, root)
    if min(level) < 0:
        raise Disconnected("planar_separator needs a connected graph")
    emb = check_embedding(p)

    h = max(level)
    by_level: list[list[int]] = [[] for _ in range(h + 2)]
    lw = np.zeros(h + 2)
    for v, l in enumerate(level):
        by_level[l].append(v)
        lw[l] += w[v]
    W = float(w.sum())
    cum = np.cumsum(lw)
    l1 = int(np.searchsorted(cum, W / 2 * (1 - 1e-15)))
    size = [len(L) for L in by_level]
    l0 = min(range(-1, l1 + 1), key=lambda l: ((size[l] if l >= 0 else 0) + 2 * (l1 - l), -l))
    l2 = min(range(l1 + 1, h + 2), key=lambda l: (size[l] + 2 * (l - l1 - 1), l))

    def lv(l):
        return by_level[l] if 0 <= l <= h else []

    cands = [_make_separator(N, adj, w, lv(l1))]
    two = _make_separator(N, adj, w, lv(l0) + lv(l2))
    cands.append(two)
    if two.balance > BALANCE * (1 + _BAL_TOL):
        cyc = _cycle_candidate(emb, level, root, l0, l2, w)
        if cyc is not None:
            cands.append(_make_separator(N, adj, w, lv(l0) + lv(l2) + cyc))
    ok = [s for s in cands if s.balance <= BALANCE * (1 + _BAL_TOL)]
    if not ok:
        raise SeparatorBoundExceeded(f"no candidate reaches balance 2/3 (best {min(s.balance for s in cands):.4f})")
    best = min(ok, key=lambda s: (s.size, s.balance))
    if check_bound and best.size > C_SEP * math.sqrt(N):
        raise SeparatorBoundExceeded(f"separator of size {best.size} exceeds {C_SEP:.3f}*sqrt({N})")
    return best


def _map_to_original(g: SpannerGraph, p: Planarization, S: Separator) -> set:
    """Replace dummies in a planarization separator by spanner vertices.

    Every dummy cuts two spanner edges; one endpoint of each is removed,
    preferring an endpoint already chosen and otherwise the one nearer
    to the crossing.
    """
    xy = g.points.xy
    out = {v for v in S.vertices if v < p.n_original}
    for x in sorted(v for v in S.vertices if v >= p.n_original):
        cx, cy = p.xy[x]
        for e in p.origin_map[x]:
            i, j, _ = g.edges[e]
            if i in out or j in out:
                continue
            di = math.hypot(xy[i, 0] - cx, xy[i, 1] - cy)
            dj = math.hypot(xy[j, 0] - cx, xy[j, 1] - cy)
            out.add(i if (di, i) <= (dj, j) else j)
    return out


def spanner_separator(g: SpannerGraph, cg: CrossingGraph | None = None, check_bound: bool = True) -> Separator:
    """Separator of a connected spanner through its planarization."""
    if g.n == 0:
        raise InvalidParams("empty graph")
    if not g.is_connected():
        raise Disconnected("spanner_separator needs a connected graph")
    p = planarize(g, cg)
    w = np.zeros(p.N)
    w[: g.n] = 1.0
    S = planar_separator(p, w, check_bound=check_bound)
    mapped = _map_to_original(g, p, S)
    adj = [list(a) for a in g.adjacency]
    return _make_separator(g.n, adj, np.ones(g.n), mapped)


def planarization_size(g: SpannerGraph, cg: CrossingGraph | None = None) -> int:
    cg = cg or build_crossing_graph(g)
    return g.n + cg.num_crossings


def is_valid_separator(adj, S: Separator) -> bool:
    """Flood-fill check that no edge joins the two sides and the parts partition V."""
    nv = len(adj)
    parts = [S.vertices, S.side_a, S.side_b]
    if sum(len(x) for x in parts) != nv or len(set().union(*parts)) != nv:
        return False
    seen = set(S.vertices)
    for s in S.side_a:
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v in S.side_b:
                    return False
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
    return True


# ---------------------------------------------------------------------------
# hierarchy


@dataclass(frozen=True)
class SeparatorTree:
    """Recursive decomposition.

    Internal nodes carry a separator (global ids) and one child per
    component left after removing it; a node with ``node=None`` just splits
    a disconnected input into its components. Leaves carry ``leaf``.
    """

    node: Separator | None
    children: tuple = ()
    leaf: frozenset | None = None

    @property
    def is_leaf(self) -> bool:
        return self.leaf is not None

    def depth(self) -> int:
        if self.is_leaf or not self.children:
            return 0
        return 1 + max(c.depth() for c in self.children)

    def leaves(self):
        if self.is_leaf:
            yield self
        for c in self.children:
            yield from c.leaves()

    def nodes(self):
        yield self
        for c in self.children:
            yield from c.nodes()


def separator_hierarchy(g: SpannerGraph, cutoff: int) -> SeparatorTree:
    if not (isinstance(cutoff, int) and cutoff >= 1):
        raise InvalidParams("cutoff must be a positive integer")
    return _hierarchy(g, list(range(g.n)), cutoff)


def _hierarchy(g: SpannerGraph, glob: list[int], cutoff: int) -> SeparatorTree:
    if len(glob) <= cutoff:
        return SeparatorTree(None, (), frozenset(glob))
    adj = [list(a) for a in g.adjacency]
    comps = _components(g.n, adj)
    if len(comps) > 1:
        kids = []
        for c in sorted(comps, key=min):
            sub, loc = g.induced(c)
            kids.append(_hierarchy(sub, [glob[i] for i in loc], cutoff))
        return SeparatorTree(None, tuple(kids))
    S = spanner_separator(g, check_bound=False)
    if not S.vertices:
        raise ConstructionError("empty separator on a component above the cutoff")
    rest = _components(g.n, adj, S.vertices)
    kids = []
    for c in sorted(rest, key=min):
        sub, loc = g.induced(c)
        kids.append(_hierarchy(sub, [glob[i] for i in loc], cutoff))
    node = Separator(
        frozenset(glob[v] for v in S.vertices),
        frozenset(glob[v] for v in S.side_a),
        frozenset(glob[v] for v in S.side_b),
        S.balance,
    )
    return SeparatorTree(node, tuple(kids))


def sssp_baseline(g: SpannerGraph, source: int) -> np.ndarray:
    """Plain Dijkstra distances from ``source`` (inf when unreachable)."""
    if not 0 <= source < g.n:
        raise UnknownVertex(source)
    if g.m == 0:
        out = np.full(g.n, np.inf)
        out[source] = 0.0
        return out
    return _csgraph_dijkstra(g.csr(), directed=False, indices=source)
