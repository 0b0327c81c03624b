"""Pure-Python/numpy implementations of the hot kernels.

These mirror ``_ckernels.pyx`` operation for operation and serve as the
fallback when the compiled extension is unavailable.
"""

from __future__ import annotations

import heapq
from array import array

import numpy as np

from .geometry import ORIENT_ERRBOUND

NAME = "python"
INF = float("inf")


def _dijkstra_to(adj, src, dst, bound, settled=None):
    dist = {src: 0.0}
    heap = [(0.0, src)]
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        if settled is not None:
            settled.append((u, d))
        if u == dst:
            return d
        for v, w in adj[u]:
            nd = d + w
            if nd <= bound and (v not in dist or nd < dist[v]):
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return INF


def greedy_naive(n, pi, pj, pd, t, tol):
    """Returns ``(ei, ej, searches)``; one Dijkstra per pair."""
    adj = [[] for _ in range(n)]
    ei, ej = [], []
    searches = 0
    for p, q, d in zip(pi.tolist(), pj.tolist(), pd.tolist()):
        thr = t * d * (1.0 + tol)
        searches += 1
        if _dijkstra_to(adj, p, q, INF) > thr:
            adj[p].append((q, d))
            adj[q].append((p, d))
            ei.append(p)
            ej.append(q)
    return np.array(ei, dtype=np.int64), np.array(ej, dtype=np.int64), searches


def greedy_fast(n, pi, pj, pd, t, tol):
    adj = [[] for _ in range(n)]
    # Upper bounds on current graph distances; edges are only ever added, so
    # a stored value stays valid for the rest of the run. A row filled by a
    # full search after the latest insertion holds exact distances.
    cache = array("d", [INF]) * (n * n)
    row_epoch = [-1] * n
    nedges = 0
    searches = 0
    ei, ej = [], []
    settled: list = []
    for p, q, d in zip(pi.tolist(), pj.tolist(), pd.tolist()):
        thr = t * d * (1.0 + tol)
        if cache[p * n + q] <= thr:
            continue
        if row_epoch[p] != nedges and row_epoch[q] != nedges:
            searches += 1
            settled.clear()
            _dijkstra_to(adj, p, -1, INF, settled)
            for v, dv in settled:
                if dv < cache[p * n + v]:
                    cache[p * n + v] = dv
                    cache[v * n + p] = dv
            row_epoch[p] = nedges
        if cache[p * n + q] > thr:
            adj[p].append((q, d))
            adj[q].append((p, d))
            nedges += 1
            if d < cache[p * n + q]:
                cache[p * n + q] = d
                cache[q * n + p] = d
            ei.append(p)
            ej.append(q)
    return np.array(ei, dtype=np.int64), np.array(ej, dtype=np.int64), searches


def _orient_sign(ax, ay, bx, by, cx, cy):
    """Filtered orientation: +1/-1 when certain, 0 when the filter is unsure."""
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    bound = ORIENT_ERRBOUND * (np.abs(detleft) + np.abs(detright))
    return np.where(det > bound, 1, np.where(-det > bound, -1, 0)).astype(np.int8)


def crossing_candidates(x1, y1, x2, y2, block=128):
    """Scan all segment pairs ``i < j``.

    Returns ``(ii, jj, status)`` where status 1 is a certified interior
    crossing and status 2 a pair the float filter could not decide (shared
    endpoint with possible collinearity, or near-degenerate orientation);
    pairs that certainly do not cross are omitted.
    """
    m = len(x1)
    minx = np.minimum(x1, x2)
    maxx = np.maximum(x1, x2)
    miny = np.minimum(y1, y2)
    maxy = np.maximum(y1, y2)
    out_i, out_j, out_s = [], [], []
    for i0 in range(0, m, block):
        i1 = min(m, i0 + block)
        I = np.arange(i0, i1)[:, None]
        J = np.arange(m)[None, :]
        keep = J > I
        keep &= ~(maxx[I] < minx[J])
        keep &= ~(maxx[J] < minx[I])
        keep &= ~(maxy[I] < miny[J])
        keep &= ~(maxy[J] < miny[I])
        ii, jj = np.nonzero(keep)
        if ii.size == 0:
            continue
        ii = ii + i0
        ax, ay, bx, by = x1[ii], y1[ii], x2[ii], y2[ii]
        cx, cy, dx, dy = x1[jj], y1[jj], x2[jj], y2[jj]
        o1 = _orient_sign(ax, ay, bx, by, cx, cy)
        o2 = _orient_sign(ax, ay, bx, by, dx, dy)
        o3 = _orient_sign(cx, cy, dx, dy, ax, ay)
        o4 = _orient_sign(cx, cy, dx, dy, bx, by)
        share = (
            ((ax == cx) & (ay == cy))
            | ((ax == dx) & (ay == dy))
            | ((bx == cx) & (by == cy))
            | ((bx == dx) & (by == dy))
        )
        # With a shared endpoint the orientation of that endpoint is exactly
        # zero; only a zero on the other endpoint can hide an overlap.
        share_unsure = share & (((o1 == 0) & (o2 == 0)) | ((o3 == 0) & (o4 == 0)))
        unsure = ~share & ((o1 == 0) | (o2 == 0) | (o3 == 0) | (o4 == 0))
        proper = ~share & ~unsure & (o1 * o2 < 0) & (o3 * o4 < 0)
        status = np.where(proper, 1, np.where(unsure | share_unsure, 2, 0))
        sel = status > 0
        out_i.append(ii[sel])
        out_j.append(jj[sel])
        out_s.append(status[sel])
    if not out_i:
        e = np.zeros(0, dtype=np.int64)
        return e, e.copy(), np.zeros(0, dtype=np.int8)
    return (
        np.concatenate(out_i).astype(np.int64),
        np.concatenate(out_j).astype(np.int64),
        np.concatenate(out_s).astype(np.int8),
    )
