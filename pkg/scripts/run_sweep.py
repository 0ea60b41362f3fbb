"""Size sweep: spanner edges against the size bound over an (n, f, k) grid.

Writes the sweep CSV and prints, per (f, k, algorithm), the fitted exponent of
edges ~ n^a next to the exponent 1 + 1/k of the bound.
"""

import argparse
import math
import sys
from collections import defaultdict
from pathlib import Path

from eftspan.sweep import SweepConfig, monotone_in_f, run_sweep, write_sweep_csv


def slope(xs, ys):
    lx = [math.log(x) for x in xs]
    ly = [math.log(y) for y in ys]
    mx, my = sum(lx) / len(lx), sum(ly) / len(ly)
    den = sum((a - mx) ** 2 for a in lx)
    return sum((a - mx) * (b - my) for a, b in zip(lx, ly)) / den if den else float("nan")


def ints(text):
    return [int(x) for x in text.split(",")]


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=ints, default=[20, 40, 80, 160])
    p.add_argument("--f", type=ints, default=[0, 1, 2, 4])
    p.add_argument("--k", type=ints, default=[2, 3])
    p.add_argument("--alg", default="exact,approx")
    p.add_argument("--density", type=float, default=4.0)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", default="results/sweep.csv")
    args = p.parse_args(argv)

    cfg = SweepConfig(ns=args.n, fs=args.f, ks=args.k, algorithms=args.alg.split(","),
                      density=args.density, trials=args.trials, seed=args.seed, workers=args.workers)
    rows = run_sweep(cfg)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with open(out, "w", newline="") as fh:
        write_sweep_csv(rows, fh)

    groups = defaultdict(lambda: defaultdict(list))
    for r in rows:
        groups[(r["algorithm"], r["k"], r["f"])][r["n"]].append(r["edges"])
    print(f"{'alg':>6} {'k':>2} {'f':>2}  fitted a   1+1/k   max ratio")
    for (alg, k, f), by_n in sorted(groups.items()):
        ns = sorted(by_n)
        means = [sum(by_n[n]) / len(by_n[n]) for n in ns]
        worst = max(r["ratio"] for r in rows if (r["algorithm"], r["k"], r["f"]) == (alg, k, f))
        print(f"{alg:>6} {k:>2} {f:>2}  {slope(ns, means):8.3f}  {1 + 1 / k:6.3f}  {worst:9.4f}")
    for alg in cfg.algorithms:
        drops = monotone_in_f(rows, alg)
        print(f"{alg}: {len(drops)} cells where edges drop as f grows")
    print(f"wrote {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
