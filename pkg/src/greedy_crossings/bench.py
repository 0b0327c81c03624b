"""Timing suites comparing the compiled kernels with the pure-Python ones."""

from __future__ import annotations

import time

import numpy as np

from . import _backend
from .crossings import _segment_arrays, build_crossing_graph
from .errors import InvalidParams
from .planar import spanner_separator
from .spanner import GREEDY_TOL, SpannerConfig, greedy_spanner_fast, sorted_pairs
from .geometry import PointSet


def _points(n: int, seed: int = 1) -> PointSet:
    return PointSet(np.random.Generator(np.random.PCG64(seed)).random((n, 2)))


def _best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def suite_kernels(sizes=(150, 300), t: float = 1.5, repeat: int = 3) -> dict:
    rows = []
    backends = _backend.available()
    for n in sizes:
        P = _points(n)
        pi, pj, pd = sorted_pairs(P)
        g = greedy_spanner_fast(P, SpannerConfig(t))
        segs = _segment_arrays(g)
        for k in backends:
            row = {"backend": k.NAME, "n": n, "m": g.m}
            row["greedy_naive_s"] = _best_of(lambda: k.greedy_naive(n, pi, pj, pd, t, GREEDY_TOL), 1 if k.NAME == "python" else repeat)
            row["greedy_fast_s"] = _best_of(lambda: k.greedy_fast(n, pi, pj, pd, t, GREEDY_TOL), repeat)
            row["crossing_scan_s"] = _best_of(lambda: k.crossing_candidates(*segs), repeat)
            rows.append(row)
    by = {(r["backend"], r["n"]): r for r in rows}
    speedups = []
    for n in sizes:
        if ("cython", n) in by and ("python", n) in by:
            c, p = by[("cython", n)], by[("python", n)]
            speedups.append({
                "n": n,
                **{key[:-2] + "_speedup": p[key] / max(c[key], 1e-9) for key in ("greedy_naive_s", "greedy_fast_s", "crossing_scan_s")},
            })
    return {"suite": "kernels", "t": t, "rows": rows, "speedups": speedups}


def suite_scaling(sizes=(256, 1024, 2048), t: float = 1.5) -> dict:
    rows = []
    for n in sizes:
        P = _points(n)
        t0 = time.perf_counter()
        g = greedy_spanner_fast(P, SpannerConfig(t))
        t1 = time.perf_counter()
        cg = build_crossing_graph(g)
        t2 = time.perf_counter()
        S = spanner_separator(g, cg)
        t3 = time.perf_counter()
        rows.append({
            "n": n, "m": g.m, "crossings": cg.num_crossings, "separator_size": S.size,
            "build_s": t1 - t0, "crossings_s": t2 - t1, "separator_s": t3 - t2,
        })
    return {"suite": "scaling", "backend": _backend.BACKEND, "t": t, "rows": rows}


def suite_smoke() -> dict:
    return suite_kernels(sizes=(60,), repeat=1)


SUITES = {"kernels": suite_kernels, "scaling": suite_scaling, "smoke": suite_smoke}


def run_suite(name: str) -> dict:
    if name not in SUITES:
        raise InvalidParams(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    return SUITES[name]()
