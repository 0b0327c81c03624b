"""Text file formats, stats JSON and SVG rendering.

Points file: one ``x y`` pair per line, ``#`` starts a comment. Graph file:
one ``i j`` pair of zero-based point indices per line; header comments
``# points: PATH`` and ``# t: VALUE`` record where the coordinates live and
the stretch factor. Floats are written with 17 significant digits so a
write/read round trip is exact.
"""

from __future__ import annotations

import json
import math
import os
import tempfile

import numpy as np

from .errors import IoError, ParseError
from .geometry import PointSet
from .spanner import SpannerGraph

STATS_SCHEMA_VERSION = 1


def atomic_write(path: str, text: str) -> None:
    """Write ``text`` to ``path`` via a temporary file and rename."""
    d = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(prefix=".tmp-", dir=d)
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise
    except OSError as exc:
        raise IoError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _read_lines(path: str) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read().splitlines()
    except OSError as exc:
        raise IoError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"not UTF-8 text ({exc.reason})", path) from exc


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def format_points(points: PointSet, comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {c}" for c in comment.splitlines())
    out.extend(f"{_fmt(x)} {_fmt(y)}" for x, y in points.xy)
    return "\n".join(out) + "\n"


def write_points(path: str, points: PointSet, comment: str | None = None) -> None:
    atomic_write(path, format_points(points, comment))


def parse_points(text: str, path: str = "<string>") -> PointSet:
    coords = []
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'x y', got {len(parts)} field(s)", path, no)
        try:
            x, y = float(parts[0]), float(parts[1])
        except ValueError:
            raise ParseError(f"not a number in {line!r}", path, no) from None
        if not (math.isfinite(x) and math.isfinite(y)):
            raise ParseError("coordinates must be finite", path, no)
        coords.append((x, y))
    return PointSet(np.array(coords, dtype=np.float64).reshape(-1, 2))


def read_points(path: str) -> PointSet:
    return parse_points("\n".join(_read_lines(path)), path)


def format_graph(g: SpannerGraph, points_ref: str | None = None) -> str:
    out = ["# greedy-crossings graph"]
    if points_ref is not None:
        out.append(f"# points: {points_ref}")
    if g.t is not None:
        out.append(f"# t: {_fmt(g.t)}")
    out.extend(f"{i} {j}" for i, j, _ in g.edges)
    return "\n".join(out) + "\n"


def write_graph(path: str, g: SpannerGraph, points_path: str | None = None) -> None:
    ref = None
    if points_path is not None:
        base = os.path.dirname(os.path.abspath(path))
        ref = os.path.relpath(os.path.abspath(points_path), base)
    atomic_write(path, format_graph(g, ref))


def parse_graph(text: str, points: PointSet | None, path: str = "<string>"):
    """Returns ``(pairs, header)``; pairs are validated against ``points`` if given."""
    header: dict[str, str] = {}
    pairs = []
    seen = set()
    n = None if points is None else len(points)
    for no, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if stripped.startswith("#"):
            body = stripped[1:].strip()
            if ":" in body:
                k, v = body.split(":", 1)
                header[k.strip()] = v.strip()
            continue
        if not stripped:
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'i j', got {len(parts)} field(s)", path, no)
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"not an integer in {stripped!r}", path, no) from None
        if i == j or i < 0 or j < 0:
            raise ParseError(f"bad edge ({i}, {j})", path, no)
        if n is not None and max(i, j) >= n:
            raise ParseError(f"edge ({i}, {j}) refers to a point beyond {n - 1}", path, no)
        key = (min(i, j), max(i, j))
        if key in seen:
            raise ParseError(f"duplicate edge ({i}, {j})", path, no)
        seen.add(key)
        pairs.append(key)
    return pairs, header


def read_graph(path: str, points_path: str | None = None) -> tuple[SpannerGraph, str]:
    """Load a graph file; coordinates come from ``points_path`` or the header."""
    text = "\n".join(_read_lines(path))
    _, header = parse_graph(text, None, path)
    if points_path is None:
        ref = header.get("points")
        if not ref:
            raise ParseError("no '# points:' header and no points file given", path)
        points_path = os.path.join(os.path.dirname(os.path.abspath(path)), ref)
    points = read_points(points_path)
    pairs, header = parse_graph(text, points, path)
    t = None
    if "t" in header:
        try:
            t = float(header["t"])
        except ValueError:
            raise ParseError(f"bad t header {header['t']!r}", path) from None
    return SpannerGraph.from_pairs(points, pairs, t), points_path


def dump_stats(stats: dict) -> str:
    return json.dumps(stats, sort_keys=True, indent=2, allow_nan=False) + "\n"


def write_stats(path: str, stats: dict) -> None:
    atomic_write(path, dump_stats(stats))


# ---------------------------------------------------------------------------
# SVG


def _f(x: float) -> str:
    s = format(float(x), ".10g")
    return "0" if s == "-0" else s


def render_svg(g: SpannerGraph, crossings=None, width: int = 800) -> str:
    """Edges as lines, points as circles, optional crossing markers.

    The y axis points up, as in the usual mathematical drawing.
    """
    xy = g.points.xy
    if len(xy):
        lo = xy.min(axis=0)
        hi = xy.max(axis=0)
    else:
        lo = hi = np.zeros(2)
    span = hi - lo
    size = float(max(span.max(), 1e-12))
    mx = 0.05 * (span[0] if span[0] > 0 else size)
    my = 0.05 * (span[1] if span[1] > 0 else size)
    vx, vy = lo[0] - mx, -hi[1] - my
    vw, vh = span[0] + 2 * mx, span[1] + 2 * my
    r = 0.006 * max(vw, vh)
    sw = 0.0025 * max(vw, vh)
    height = max(1, round(width * vh / vw))
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="{_f(vx)} {_f(vy)} {_f(vw)} {_f(vh)}">',
        f'<g class="edges" stroke="#222" stroke-width="{_f(sw)}" stroke-linecap="round">',
    ]
    for i, j, _ in g.edges:
        out.append(f'<line x1="{_f(xy[i, 0])}" y1="{_f(-xy[i, 1])}" x2="{_f(xy[j, 0])}" y2="{_f(-xy[j, 1])}"/>')
    out.append("</g>")
    out.append('<g class="points" fill="#1f5fbf">')
    for x, y in xy:
        out.append(f'<circle cx="{_f(x)}" cy="{_f(-y)}" r="{_f(r)}"/>')
    out.append("</g>")
    if crossings:
        out.append('<g class="crossings" fill="#d62728">')
        for x, y in crossings:
            out.append(f'<rect x="{_f(x - r)}" y="{_f(-y - r)}" width="{_f(2 * r)}" height="{_f(2 * r)}"/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
