"""Command-line driver.

Every failure prints a single ``ERROR <CODE>: message`` line on stderr and
exits nonzero (2 for bad parameters, 3 for failed verification, 1 otherwise).
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import formats
from ._parallel import run_all
from .adversarial import ArrangementSpec, ZigZagSpec, stretch_for, three_band_arrangement, zigzag_points
from .crossings import bound_total_not_smaller, build_crossing_graph, degeneracy, longer_crossing_counts
from .errors import CoincidentCrossings, DegenerateOverlap, InvalidParams, SpannerError, VerificationFailed
from .generators import perturb, uniform_points
from .planar import separator_hierarchy, spanner_separator
from .spanner import SpannerConfig, SpannerGraph, greedy_spanner_fast, greedy_spanner_naive, verify_no_shortcut, verify_stretch


def graph_stats(g: SpannerGraph, t: float, with_separator: bool = False) -> dict:
    cg = build_crossing_graph(g)
    k, _ = degeneracy(cg)
    per_edge = [len(a) for a in cg.adjacency]
    longer = longer_crossing_counts(g, cg)
    stats = {
        "schema_version": formats.STATS_SCHEMA_VERSION,
        "n": g.n,
        "m": g.m,
        "t": t,
        "total_weight": g.total_weight(),
        "max_degree": g.max_degree(),
        "crossing_count": cg.num_crossings,
        "max_crossings_per_edge": max(per_edge, default=0),
        "max_longer_crossings": int(longer.max()) if len(longer) else 0,
        "degeneracy": k,
        "bound_total": bound_total_not_smaller(t, 1.0).total,
    }
    if with_separator:
        if g.is_connected():
            S = spanner_separator(g, cg)
            stats["separator_size"] = S.size
            stats["separator_balance"] = S.balance
            stats["planarization_vertices"] = g.n + cg.num_crossings
        else:
            stats["separator_size"] = None
    return stats


def _stretch(args) -> float:
    if args.t is None:
        raise InvalidParams("--t is required")
    SpannerConfig(args.t)
    return args.t


def cmd_generate(args) -> None:
    kind = args.kind
    if kind == "uniform":
        if args.n is None:
            raise InvalidParams("--n is required for uniform points")
        pts = uniform_points(args.n, args.seed)
        note = f"uniform n={args.n} seed={args.seed} rng=PCG64"
    elif kind == "zigzag":
        if args.n is None:
            raise InvalidParams("--n (point count) is required for a zig-zag")
        if args.s is None:
            s = stretch_for(_stretch(args))
        else:
            s = args.s
        pts = zigzag_points(ZigZagSpec(dx=args.dx, s=s, count=args.n))
        note = f"zigzag count={args.n} s={s!r} dx={args.dx!r}"
    elif kind == "arrangement":
        if args.delta is None or args.columns is None:
            raise InvalidParams("--delta and --columns are required for an arrangement")
        spec = ArrangementSpec(_stretch(args), args.delta, args.columns, args.dx)
        pts = three_band_arrangement(spec)
        note = f"arrangement t={spec.t!r} delta={spec.delta!r} columns={spec.columns} dx={spec.dx!r}"
    else:
        if not args.in_path:
            raise InvalidParams("--in is required for kind=file")
        pts = formats.read_points(args.in_path)
        note = f"copied from {os.path.basename(args.in_path)}"
    if args.perturb:
        pts = perturb(pts, args.perturb, args.seed)
        note += f" perturb={args.perturb!r}"
    formats.write_points(args.out, pts, note)


def cmd_build(args) -> None:
    t = _stretch(args)
    pts = formats.read_points(args.in_path)
    if args.perturb:
        pts = perturb(pts, args.perturb, args.seed)
    cfg = SpannerConfig(t)
    builder = greedy_spanner_naive if args.algo == "naive" else greedy_spanner_fast
    g = builder(pts, cfg)
    points_path = args.in_path
    if args.perturb:
        points_path = args.out + ".points"
        formats.write_points(points_path, pts, f"perturbed copy of {os.path.basename(args.in_path)}")
    formats.write_graph(args.out, g, points_path)
    if args.stats:
        formats.write_stats(args.stats, graph_stats(g, t, args.separator))


def cmd_verify(args) -> None:
    t = _stretch(args)
    g, _ = formats.read_graph(args.in_graph, args.in_points)
    res = run_all({"stretch": lambda: verify_stretch(g, t), "shortcut": lambda: verify_no_shortcut(g, t)})
    st, sc = res["stretch"], res["shortcut"]
    print(formats.dump_stats({
        "stretch_ok": st.ok,
        "max_observed_ratio": st.max_observed_ratio,
        "stretch_violations": len(st.violating_pairs),
        "shortcut_ok": sc.ok,
        "worst_margin": sc.worst_margin if math.isfinite(sc.worst_margin) else None,
        "shortcut_violations": len(sc.violating_edges),
    }), end="")
    if not (st.ok and sc.ok):
        raise VerificationFailed(
            f"{len(st.violating_pairs)} stretch violation(s), {len(sc.violating_edges)} shortcut violation(s)"
        )


def _graph_t(g: SpannerGraph, args) -> float:
    t = getattr(args, "t", None) or g.t
    if t is None:
        raise InvalidParams("stretch factor unknown: graph has no '# t:' header, pass --t")
    return t


def cmd_crossings(args) -> None:
    g, _ = formats.read_graph(args.in_graph, args.in_points)
    stats = graph_stats(g, _graph_t(g, args))
    cg = build_crossing_graph(g)
    hist: dict[str, int] = {}
    for a in cg.adjacency:
        hist[str(len(a))] = hist.get(str(len(a)), 0) + 1
    stats["crossings_per_edge_histogram"] = hist
    formats.write_stats(args.stats, stats)


def cmd_separator(args) -> None:
    g, _ = formats.read_graph(args.in_graph, args.in_points)
    if args.cutoff < 1:
        raise InvalidParams("--cutoff must be >= 1")
    tree = separator_hierarchy(g, args.cutoff)
    seps = [nd.node for nd in tree.nodes() if nd.node is not None]
    leaves = list(tree.leaves())
    stats = {
        "schema_version": formats.STATS_SCHEMA_VERSION,
        "n": g.n,
        "m": g.m,
        "cutoff": args.cutoff,
        "depth": tree.depth(),
        "leaves": len(leaves),
        "max_leaf_size": max((len(l.leaf) for l in leaves), default=0),
        "separator_size": seps[0].size if seps else 0,
        "separator_balance": seps[0].balance if seps else 0.0,
        "separator_vertices_total": sum(s.size for s in seps),
        "max_balance": max((s.balance for s in seps), default=0.0),
    }
    formats.write_stats(args.stats, stats)


def cmd_svg(args) -> None:
    g, _ = formats.read_graph(args.in_graph, args.in_points)
    pts = None
    if not args.no_crossings:
        cg = build_crossing_graph(g)
        pts = [cg.crossing_points[p] for p in cg.pairs()]
    formats.atomic_write(args.out, formats.render_svg(g, pts))


def cmd_bench(args) -> None:
    from .bench import run_suite

    print(formats.dump_stats(run_suite(args.suite)), end="")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="greedy-crossings", description="Greedy geometric spanners and their crossings.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write a point set")
    g.add_argument("--kind", choices=["uniform", "zigzag", "arrangement", "file"], required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--t", type=float)
    g.add_argument("--s", type=float, help="zig-zag stretch (default sqrt(t^2-1))")
    g.add_argument("--delta", type=float)
    g.add_argument("--columns", type=int)
    g.add_argument("--dx", type=float, default=1.0)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--perturb", type=float, default=0.0)
    g.add_argument("--in", dest="in_path")
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_generate)

    b = sub.add_parser("build", help="build a greedy spanner")
    b.add_argument("--in", dest="in_path", required=True)
    b.add_argument("--t", type=float, required=True)
    b.add_argument("--algo", choices=["naive", "fast"], default="fast")
    b.add_argument("--out", required=True)
    b.add_argument("--stats")
    b.add_argument("--separator", action="store_true", help="include the separator size in the stats")
    b.add_argument("--perturb", type=float, default=0.0)
    b.add_argument("--seed", type=int, default=0)
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check stretch and short-cutting")
    v.add_argument("--in-points")
    v.add_argument("--in-graph", required=True)
    v.add_argument("--t", type=float, required=True)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("crossings", help="crossing statistics")
    c.add_argument("--in-graph", required=True)
    c.add_argument("--in-points")
    c.add_argument("--t", type=float)
    c.add_argument("--stats", required=True)
    c.set_defaults(func=cmd_crossings)

    s = sub.add_parser("separator", help="separator hierarchy statistics")
    s.add_argument("--in-graph", required=True)
    s.add_argument("--in-points")
    s.add_argument("--cutoff", type=int, required=True)
    s.add_argument("--stats", required=True)
    s.set_defaults(func=cmd_separator)

    sv = sub.add_parser("svg", help="render a graph")
    sv.add_argument("--in-graph", required=True)
    sv.add_argument("--in-points")
    sv.add_argument("--out", required=True)
    sv.add_argument("--no-crossings", action="store_true", help="do not mark crossing points")
    sv.set_defaults(func=cmd_svg)

    be = sub.add_parser("bench", help="run a timing suite")
    be.add_argument("--suite", required=True)
    be.set_defaults(func=cmd_bench)
    return p


def _fail(code: str, msg: str, status: int) -> int:
    msg = " ".join(str(msg).split())
    print(f"ERROR {code}: {msg}", file=sys.stderr)
    return status


def main(argv=None) -> int:
    parser = build_parser()

    def _usage_error(message):
        raise InvalidParams(message)

    parser.error = _usage_error  # type: ignore[method-assign]
    for action in parser._subparsers._group_actions:  # type: ignore[union-attr]
        for sp in action.choices.values():
            sp.error = _usage_error  # type: ignore[method-assign]
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except VerificationFailed as exc:
        return _fail(exc.code, exc, 3)
    except InvalidParams as exc:
        return _fail(exc.code, exc, 2)
    except (DegenerateOverlap, CoincidentCrossings) as exc:
        return _fail(exc.code, f"{exc} (points are not in general position; rebuild with --perturb EPS)", 1)
    except SpannerError as exc:
        return _fail(exc.code, exc, 1)
    except KeyboardInterrupt:
        return _fail("E_INTERRUPTED", "interrupted", 130)
    return 0


if __name__ == "__main__":
    sys.exit(main())
