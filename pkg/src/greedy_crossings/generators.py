"""Seeded point generators.

All randomness comes from NumPy's PCG64 bit generator seeded with a 64-bit
unsigned integer, so files reproduce across platforms.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import InvalidParams
from .geometry import PointSet


def make_rng(seed: int) -> np.random.Generator:
    """The one generator used for every random choice: NumPy's PCG64."""
    if not 0 <= seed < 2**64:
        raise InvalidParams("seed must be an unsigned 64-bit integer")
    return np.random.Generator(np.random.PCG64(seed))


def uniform_points(n: int, seed: int) -> PointSet:
    """``n`` distinct points drawn i.i.d. from the unit square."""
    if n < 1:
        raise InvalidParams("n must be >= 1")
    rng = make_rng(seed)
    xy = rng.random((n, 2))
    while True:
        _, first = np.unique(xy, axis=0, return_index=True)
        if len(first) == n:
            return PointSet(xy)
        dup = np.setdiff1d(np.arange(n), first)
        xy[dup] = rng.random((len(dup), 2))


def perturb(points: PointSet, eps: float, seed: int) -> PointSet:
    """Uniform jitter in [-eps*D, eps*D] per coordinate, D the bounding-box diagonal."""
    if not (eps >= 0 and math.isfinite(eps)):
        raise InvalidParams("perturbation must be a nonnegative number")
    if eps == 0 or len(points) == 0:
        return points
    scale = eps * (points.diameter() or 1.0)
    rng = make_rng(seed)
    return PointSet(points.xy + rng.uniform(-scale, scale, size=points.xy.shape))
