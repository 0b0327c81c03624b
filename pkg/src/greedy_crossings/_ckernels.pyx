# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled hot kernels: greedy construction loops and the crossing scan.

Semantics match ``_pykernels`` exactly; see that module for documentation.
"""

import numpy as np
cimport numpy as cnp
from libc.stdlib cimport malloc, realloc, free
from libc.math cimport INFINITY, fabs

cnp.import_array()

NAME = "cython"

cdef double ORIENT_ERRBOUND = (3.0 + 16.0 * 2.0**-53) * 2.0**-53


cdef struct Graph:
    int n
    int cap
    int nhalf
    int* head
    int* nxt
    int* to
    double* w


cdef struct Heap:
    int size
    int cap
    double* key
    int* val


cdef int graph_init(Graph* g, int n) except -1:
    cdef int i
    g.n = n
    g.cap = 8 * n + 16
    g.nhalf = 0
    g.head = <int*> malloc(n * sizeof(int))
    g.nxt = <int*> malloc(g.cap * sizeof(int))
    g.to = <int*> malloc(g.cap * sizeof(int))
    g.w = <double*> malloc(g.cap * sizeof(double))
    if g.head == NULL or g.nxt == NULL or g.to == NULL or g.w == NULL:
        raise MemoryError()
    for i in range(n):
        g.head[i] = -1
    return 0


cdef void graph_free(Graph* g):
    free(g.head)
    free(g.nxt)
    free(g.to)
    free(g.w)


cdef int graph_add_half(Graph* g, int u, int v, double w) except -1:
    cdef int newcap
    if g.nhalf == g.cap:
        newcap = 2 * g.cap
        g.nxt = <int*> realloc(g.nxt, newcap * sizeof(int))
        g.to = <int*> realloc(g.to, newcap * sizeof(int))
        g.w = <double*> realloc(g.w, newcap * sizeof(double))
        if g.nxt == NULL or g.to == NULL or g.w == NULL:
            raise MemoryError()
        g.cap = newcap
    g.to[g.nhalf] = v
    g.w[g.nhalf] = w
    g.nxt[g.nhalf] = g.head[u]
    g.head[u] = g.nhalf
    g.nhalf += 1
    return 0


cdef int heap_init(Heap* h, int cap) except -1:
    h.size = 0
    h.cap = cap
    h.key = <double*> malloc(cap * sizeof(double))
    h.val = <int*> malloc(cap * sizeof(int))
    if h.key == NULL or h.val == NULL:
        raise MemoryError()
    return 0


cdef void heap_free(Heap* h):
    free(h.key)
    free(h.val)


cdef int heap_push(Heap* h, double k, int v) except -1:
    cdef int i, parent
    if h.size == h.cap:
        h.cap = 2 * h.cap
        h.key = <double*> realloc(h.key, h.cap * sizeof(double))
        h.val = <int*> realloc(h.val, h.cap * sizeof(int))
        if h.key == NULL or h.val == NULL:
            raise MemoryError()
    i = h.size
    h.size += 1
    while i > 0:
        parent = (i - 1) >> 1
        if h.key[parent] < k or (h.key[parent] == k and h.val[parent] <= v):
            break
        h.key[i] = h.key[parent]
        h.val[i] = h.val[parent]
        i = parent
    h.key[i] = k
    h.val[i] = v
    return 0


cdef inline void heap_pop(Heap* h, double* k, int* v) nogil:
    cdef double lk
    cdef int lv, i, c
    k[0] = h.key[0]
    v[0] = h.val[0]
    h.size -= 1
    if h.size == 0:
        return
    lk = h.key[h.size]
    lv = h.val[h.size]
    i = 0
    while True:
        c = 2 * i + 1
        if c >= h.size:
            break
        if c + 1 < h.size and (h.key[c + 1] < h.key[c] or (h.key[c + 1] == h.key[c] and h.val[c + 1] < h.val[c])):
            c += 1
        if lk < h.key[c] or (lk == h.key[c] and lv <= h.val[c]):
            break
        h.key[i] = h.key[c]
        h.val[i] = h.val[c]
        i = c
    h.key[i] = lk
    h.val[i] = lv


cdef double dijkstra_to(Graph* g, Heap* h, double* dist, int* stamp, int run,
                        int src, int dst, double bound, double* cache) except? -1.0:
    cdef double d, nd
    cdef int u, v, e, n = g.n
    h.size = 0
    stamp[src] = run
    dist[src] = 0.0
    heap_push(h, 0.0, src)
    while h.size > 0:
        heap_pop(h, &d, &u)
        if d > dist[u]:
            continue
        if cache != NULL:
            if d < cache[<Py_ssize_t> src * n + u]:
                cache[<Py_ssize_t> src * n + u] = d
                cache[<Py_ssize_t> u * n + src] = d
        if u == dst:
            return d
        e = g.head[u]
        while e != -1:
            v = g.to[e]
            nd = d + g.w[e]
            if nd <= bound and (stamp[v] != run or nd < dist[v]):
                stamp[v] = run
                dist[v] = nd
                heap_push(h, nd, v)
            e = g.nxt[e]
    return INFINITY


def _greedy(int n, long[::1] pi, long[::1] pj, double[::1] pd, double t, double tol, bint fast):
    cdef Graph g
    cdef Heap h
    cdef double* dist = NULL
    cdef int* stamp = NULL
    cdef double* cache = NULL
    cdef long* row_epoch = NULL
    cdef Py_ssize_t k, npairs = pi.shape[0], idx
    cdef int p, q, run = 0
    cdef long nedges = 0
    cdef double d, thr, ds
    ei = []
    ej = []
    graph_init(&g, n)
    heap_init(&h, 8 * n + 16)
    try:
        dist = <double*> malloc(n * sizeof(double))
        stamp = <int*> malloc(n * sizeof(int))
        if dist == NULL or stamp == NULL:
            raise MemoryError()
        for p in range(n):
            stamp[p] = 0
        if fast:
            cache = <double*> malloc(<size_t> n * n * sizeof(double))
            row_epoch = <long*> malloc(n * sizeof(long))
            if cache == NULL or row_epoch == NULL:
                raise MemoryError()
            for idx in range(<Py_ssize_t> n * n):
                cache[idx] = INFINITY
            for p in range(n):
                row_epoch[p] = -1
        for k in range(npairs):
            p = pi[k]
            q = pj[k]
            d = pd[k]
            thr = t * d * (1.0 + tol)
            if fast:
                ds = cache[<Py_ssize_t> p * n + q]
                if ds <= thr:
                    continue
                # A row refreshed since the last insertion is exact.
                if row_epoch[p] != nedges and row_epoch[q] != nedges:
                    run += 1
                    dijkstra_to(&g, &h, dist, stamp, run, p, -1, INFINITY, cache)
                    row_epoch[p] = nedges
                    ds = cache[<Py_ssize_t> p * n + q]
            else:
                run += 1
                ds = dijkstra_to(&g, &h, dist, stamp, run, p, q, INFINITY, NULL)
            if ds > thr:
                graph_add_half(&g, p, q, d)
                graph_add_half(&g, q, p, d)
                nedges += 1
                if fast and d < cache[<Py_ssize_t> p * n + q]:
                    cache[<Py_ssize_t> p * n + q] = d
                    cache[<Py_ssize_t> q * n + p] = d
                ei.append(p)
                ej.append(q)
    finally:
        graph_free(&g)
        heap_free(&h)
        free(dist)
        free(stamp)
        free(cache)
        free(row_epoch)
    return np.array(ei, dtype=np.int64), np.array(ej, dtype=np.int64), run


def greedy_naive(int n, pi, pj, pd, double t, double tol):
    return _greedy(n, np.ascontiguousarray(pi, dtype=np.int64), np.ascontiguousarray(pj, dtype=np.int64),
                   np.ascontiguousarray(pd, dtype=np.float64), t, tol, False)


def greedy_fast(int n, pi, pj, pd, double t, double tol):
    return _greedy(n, np.ascontiguousarray(pi, dtype=np.int64), np.ascontiguousarray(pj, dtype=np.int64),
                   np.ascontiguousarray(pd, dtype=np.float64), t, tol, True)


cdef inline int orient_sign(double ax, double ay, double bx, double by, double cx, double cy) nogil:
    cdef double detleft = (ax - cx) * (by - cy)
    cdef double detright = (ay - cy) * (bx - cx)
    cdef double det = detleft - detright
    cdef double bound = ORIENT_ERRBOUND * (fabs(detleft) + fabs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    return 0


def crossing_candidates(x1, y1, x2, y2):
    cdef double[::1] X1 = np.ascontiguousarray(x1, dtype=np.float64)
    cdef double[::1] Y1 = np.ascontiguousarray(y1, dtype=np.float64)
    cdef double[::1] X2 = np.ascontiguousarray(x2, dtype=np.float64)
    cdef double[::1] Y2 = np.ascontiguousarray(y2, dtype=np.float64)
    cdef Py_ssize_t m = X1.shape[0], i, j
    cdef double ax, ay, bx, by, cx, cy, dx, dy
    cdef double iminx, imaxx, iminy, imaxy
    cdef int o1, o2, o3, o4, status
    cdef bint share
    out_i = []
    out_j = []
    out_s = []
    for i in range(m):
        ax = X1[i]; ay = Y1[i]; bx = X2[i]; by = Y2[i]
        iminx = ax if ax < bx else bx
        imaxx = bx if ax < bx else ax
        iminy = ay if ay < by else by
        imaxy = by if ay < by else ay
        for j in range(i + 1, m):
            cx = X1[j]; cy = Y1[j]; dx = X2[j]; dy = Y2[j]
            if imaxx < (cx if cx < dx else dx) or (dx if cx < dx else cx) < iminx:
                continue
            if imaxy < (cy if cy < dy else dy) or (dy if cy < dy else cy) < iminy:
                continue
            o1 = orient_sign(ax, ay, bx, by, cx, cy)
            o2 = orient_sign(ax, ay, bx, by, dx, dy)
            o3 = orient_sign(cx, cy, dx, dy, ax, ay)
            o4 = orient_sign(cx, cy, dx, dy, bx, by)
            share = ((ax == cx and ay == cy) or (ax == dx and ay == dy)
                     or (bx == cx and by == cy) or (bx == dx and by == dy))
            status = 0
            if share:
                if (o1 == 0 and o2 == 0) or (o3 == 0 and o4 == 0):
                    status = 2
            elif o1 == 0 or o2 == 0 or o3 == 0 or o4 == 0:
                status = 2
            elif o1 * o2 < 0 and o3 * o4 < 0:
                status = 1
            if status:
                out_i.append(i)
                out_j.append(j)
                out_s.append(status)
    return (np.array(out_i, dtype=np.int64), np.array(out_j, dtype=np.int64),
            np.array(out_s, dtype=np.int8))
