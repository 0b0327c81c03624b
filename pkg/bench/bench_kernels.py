"""Compare the compiled and pure-Python kernels.

    python bench/bench_kernels.py [--suite kernels|scaling|smoke] [--json out.json]
"""

import argparse

from greedy_crossings import formats
from greedy_crossings.bench import SUITES, run_suite


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--suite", default="kernels", choices=sorted(SUITES))
    ap.add_argument("--json")
    args = ap.parse_args()
    res = run_suite(args.suite)
    rows = res["rows"]
    cols = list(rows[0])
    print("  ".join(f"{c:>16}" for c in cols))
    for r in rows:
        print("  ".join(f"{r[c]:>16.4g}" if isinstance(r[c], float) else f"{r[c]!s:>16}" for c in cols))
    for s in res.get("speedups", []):
        print(f"n={s['n']}: " + ", ".join(f"{k} x{v:.1f}" for k, v in s.items() if k != "n"))
    if args.json:
        formats.write_stats(args.json, res)


if __name__ == "__main__":
    main()
