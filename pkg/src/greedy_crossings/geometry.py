"""Planar primitives: orientation, segment crossing, angles and projections.

Orientation is evaluated in double precision behind a static error filter;
when the filter cannot certify the sign the determinant is re-evaluated
exactly with rationals, so a zero result really means collinear.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import DegenerateOverlap, InvalidParams, NotCrossing

# Shewchuk's ccwerrboundA, (3 + 16 eps) * eps with eps = 2**-53.
ORIENT_ERRBOUND = (3.0 + 16.0 * 2.0**-53) * 2.0**-53


@dataclass(frozen=True)
class Point:
    id: int
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidParams(f"point {self.id} has non-finite coordinates")

    @property
    def xy(self) -> tuple[float, float]:
        return (self.x, self.y)


@dataclass(frozen=True)
class Segment:
    a: Point
    b: Point

    def __post_init__(self):
        if self.a.x == self.b.x and self.a.y == self.b.y:
            raise InvalidParams("segment has zero length")

    def length(self) -> float:
        return _dist(self.a.x, self.a.y, self.b.x, self.b.y)

    @classmethod
    def from_coords(cls, p, q, ids=(0, 1)) -> "Segment":
        return cls(Point(ids[0], float(p[0]), float(p[1])), Point(ids[1], float(q[0]), float(q[1])))


class PointSet:
    """Immutable ordered collection of 2-D points with ids ``0..n-1``."""

    __slots__ = ("_xy",)

    def __init__(self, coords):
        xy = np.array(coords, dtype=np.float64).reshape(-1, 2)
        if not np.all(np.isfinite(xy)):
            raise InvalidParams("coordinates must be finite")
        xy.setflags(write=False)
        self._xy = xy

    @property
    def xy(self) -> np.ndarray:
        return self._xy

    def __len__(self) -> int:
        return self._xy.shape[0]

    def __getitem__(self, i: int) -> Point:
        if not 0 <= i < len(self):
            raise IndexError(i)
        return Point(i, float(self._xy[i, 0]), float(self._xy[i, 1]))

    def __iter__(self) -> Iterator[Point]:
        return (self[i] for i in range(len(self)))

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and np.array_equal(self._xy, other._xy)

    def __hash__(self) -> int:
        return hash(self._xy.tobytes())

    def __repr__(self) -> str:
        return f"PointSet(n={len(self)})"

    def has_duplicates(self) -> bool:
        if len(self) < 2:
            return False
        return len(np.unique(self._xy, axis=0)) != len(self)

    def diameter(self) -> float:
        """Bounding-box diagonal; a cheap stand-in for the true diameter."""
        if len(self) == 0:
            return 0.0
        lo = self._xy.min(axis=0)
        hi = self._xy.max(axis=0)
        return float(math.hypot(*(hi - lo)))


def _dist(ax: float, ay: float, bx: float, by: float) -> float:
    # The same expression is used by the pair-distance code in numpy and C,
    # so all distance values agree bit for bit.
    dx = bx - ax
    dy = by - ay
    return math.sqrt(dx * dx + dy * dy)


def orient_xy(ax: float, ay: float, bx: float, by: float, cx: float, cy: float) -> int:
    detleft = (ax - cx) * (by - cy)
    detright = (ay - cy) * (bx - cx)
    det = detleft - detright
    bound = ORIENT_ERRBOUND * (abs(detleft) + abs(detright))
    if det > bound:
        return 1
    if -det > bound:
        return -1
    exact = (Fraction(ax) - Fraction(cx)) * (Fraction(by) - Fraction(cy)) - (
        Fraction(ay) - Fraction(cy)
    ) * (Fraction(bx) - Fraction(cx))
    return (exact > 0) - (exact < 0)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the signed area of triangle ``pqr`` (+1 counter-clockwise)."""
    return orient_xy(p.x, p.y, q.x, q.y, r.x, r.y)


def _collinear_overlap(a, b, c, d) -> bool:
    """For four collinear points, do segments ab and cd share more than one point?"""
    axis = 0 if abs(b[0] - a[0]) >= abs(b[1] - a[1]) else 1
    lo1, hi1 = sorted((a[axis], b[axis]))
    lo2, hi2 = sorted((c[axis], d[axis]))
    return min(hi1, hi2) > max(lo1, lo2)


def cross_xy(a, b, c, d) -> bool:
    """Interior crossing test on raw coordinate pairs."""
    o1 = orient_xy(a[0], a[1], b[0], b[1], c[0], c[1])
    o2 = orient_xy(a[0], a[1], b[0], b[1], d[0], d[1])
    if o1 == 0 and o2 == 0:
        if _collinear_overlap(a, b, c, d):
            raise DegenerateOverlap(f"collinear overlapping segments {a}-{b} and {c}-{d}")
        return False
    if o1 * o2 >= 0:
        return False
    o3 = orient_xy(c[0], c[1], d[0], d[1], a[0], a[1])
    o4 = orient_xy(c[0], c[1], d[0], d[1], b[0], b[1])
    return o3 * o4 < 0


def segments_cross(s1: Segment, s2: Segment) -> bool:
    """True iff the open interiors of the two segments share a point.

    Touching at an endpoint is not a crossing. Collinear segments that
    overlap in more than a point raise :class:`DegenerateOverlap`.
    """
    return cross_xy(s1.a.xy, s1.b.xy, s2.a.xy, s2.b.xy)


def crossing_point_xy(a, b, c, d) -> tuple[float, float]:
    rx, ry = b[0] - a[0], b[1] - a[1]
    sx, sy = d[0] - c[0], d[1] - c[1]
    denom = rx * sy - ry * sx
    qx, qy = c[0] - a[0], c[1] - a[1]
    lam = (qx * sy - qy * sx) / denom
    return (a[0] + lam * rx, a[1] + lam * ry)


def crossing_point(s1: Segment, s2: Segment) -> tuple[float, float]:
    if not segments_cross(s1, s2):
        raise NotCrossing("segments do not cross")
    return crossing_point_xy(s1.a.xy, s1.b.xy, s2.a.xy, s2.b.xy)


def line_angle_xy(a, b) -> float:
    """Direction of the supporting line, folded into ``[0, pi)``."""
    ang = math.atan2(b[1] - a[1], b[0] - a[0])
    if ang < 0:
        ang += math.pi
    if ang >= math.pi:
        ang -= math.pi
    return ang


def line_angle(seg: Segment) -> float:
    return line_angle_xy(seg.a.xy, seg.b.xy)


def angle_between_xy(a, b, c, d) -> float:
    diff = abs(line_angle_xy(a, b) - line_angle_xy(c, d))
    return min(diff, math.pi - diff)


def angle_between(s1: Segment, s2: Segment) -> float:
    """Unsigned acute angle between the supporting lines, in ``[0, pi/2]``."""
    return angle_between_xy(s1.a.xy, s1.b.xy, s2.a.xy, s2.b.xy)


def project_interval(seg: Segment, baseline: Segment) -> tuple[float, float]:
    """Scalar projections of ``seg.a`` and ``seg.b`` onto the baseline's line.

    Parameters are measured from ``baseline.a`` along the unit vector towards
    ``baseline.b``; the pair is returned in endpoint order, not sorted.
    """
    bx, by = baseline.a.xy
    ux, uy = baseline.b.x - bx, baseline.b.y - by
    norm = math.sqrt(ux * ux + uy * uy)
    ux, uy = ux / norm, uy / norm
    pa = (seg.a.x - bx) * ux + (seg.a.y - by) * uy
    pb = (seg.b.x - bx) * ux + (seg.b.y - by) * uy
    return (pa, pb)


def segments_from(points: Sequence[tuple[float, float]], pairs: Iterable[tuple[int, int]]) -> list[Segment]:
    out = []
    for i, j in pairs:
        out.append(
            Segment(
                Point(i, float(points[i][0]), float(points[i][1])),
                Point(j, float(points[j][0]), float(points[j][1])),
            )
        )
    return out
