"""Unblocked alternating path counts on reduced, degree-split greedy spanners.

For each input density the script builds an exact greedy spanner, applies the
block-frequency reduction and degree splitting, subsamples edges with
probability min(1, 8k/d), and counts simple unblocked alternating k-paths
(alpha). It reports alpha / (n (d/k)^k) and the log-log slope of alpha
against d, which should sit near k if the counts grow like (d/k)^k.
"""

import argparse
import math
import sys

from eftspan.blocking import extract_blocking_set, reduce_block_frequency
from eftspan.census import count_paths, random_edge_subsample, split_high_degree
from eftspan.generators import gen_random
from eftspan.greedy import ft_greedy_exact


def fit(xs, ys):
    pts = [(math.log(x), math.log(y)) for x, y in zip(xs, ys) if x > 0 and y > 0]
    if len(pts) < 2:
        return float("nan")
    mx = sum(a for a, _ in pts) / len(pts)
    my = sum(b for _, b in pts) / len(pts)
    den = sum((a - mx) ** 2 for a, _ in pts)
    return sum((a - mx) * (b - my) for a, b in pts) / den if den else float("nan")


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, default=24)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--f", type=int, default=3)
    p.add_argument("--densities", default="1.5,2,3,4,6,8,10", help="input edges per node")
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-subsample", action="store_true")
    args = p.parse_args(argv)

    ds, alphas = [], []
    print(f"{'dens':>5} {'m(H)':>6} {'d':>6} {'p':>5} {'alpha':>9} {'alpha/(n(d/k)^k)':>18}")
    for dens in (float(x) for x in args.densities.split(",")):
        m = min(int(dens * args.n), args.n * (args.n - 1) // 2)
        for rep in range(args.reps):
            seed = args.seed * 1000 + rep
            res = ft_greedy_exact(gen_random(args.n, m, "uniform", seed), args.f, args.k)
            h, b = res.spanner, extract_blocking_set(res)
            if args.f:
                h, b = reduce_block_frequency(h, b, args.f)
            h, b, _ = split_high_degree(h, b)
            d = h.average_degree()
            if d == 0:
                continue
            prob = 1.0 if args.no_subsample else min(1.0, 8 * args.k / d)
            hs, bs = random_edge_subsample(h, b, prob, seed)
            alpha = count_paths(hs, bs, args.k, classes=("unblocked_alternating",), force=True) \
                .totals().unblocked_alternating
            scale = h.n * (d / args.k) ** args.k
            ds.append(d)
            alphas.append(alpha)
            print(f"{dens:5.1f} {h.m:6d} {d:6.2f} {prob:5.2f} {alpha:9d} {alpha / scale:18.4f}")
    print(f"log-log slope of alpha vs d: {fit(ds, alphas):.3f} (k = {args.k})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
