"""Thread fan-out for independent checks, capped by ``SPANNER_THREADS``."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from .errors import InvalidParams


def thread_count() -> int:
    raw = os.environ.get("SPANNER_THREADS", "").strip()
    if not raw:
        return max(1, os.cpu_count() or 1)
    try:
        k = int(raw)
    except ValueError:
        raise InvalidParams(f"SPANNER_THREADS must be a positive integer, got {raw!r}") from None
    if k < 1:
        raise InvalidParams(f"SPANNER_THREADS must be a positive integer, got {raw!r}")
    return k


def run_all(tasks: dict):
    """Run zero-argument callables concurrently; results keyed like ``tasks``."""
    k = min(thread_count(), max(1, len(tasks)))
    if k == 1:
        return {name: fn() for name, fn in tasks.items()}
    with ThreadPoolExecutor(max_workers=k) as ex:
        futs = {name: ex.submit(fn) for name, fn in tasks.items()}
        return {name: f.result() for name, f in futs.items()}
