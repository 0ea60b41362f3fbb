"""Blow up a bipartite base graph and check that it is its own f-EFT spanner.

With right-side multiplicity f+1 and left multiplicity 1, every edge of the
blow-up has f parallel detours of the same length as in the base graph, so
the greedy keeps everything whenever the base girth exceeds 2k. The default
base graph is the 6-cycle.
"""

import argparse
import sys

from eftspan.generators import blow_up, even_cycle_bipartite
from eftspan.graph import girth, read_graph
from eftspan.greedy import ft_greedy
from eftspan.verify import verify_eft


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--base", help="bipartite graph file with an L line (default: C6)")
    p.add_argument("--f", type=int, default=1)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--left", type=int, default=1, help="left multiplicity")
    p.add_argument("--alg", choices=["exact", "approx"], default="exact")
    p.add_argument("--sampled", action="store_true", help="sampled verification for large inputs")
    args = p.parse_args(argv)

    base = read_graph(args.base) if args.base else even_cycle_bipartite(6)
    g = blow_up(base, args.left, args.f + 1)
    print(f"base: n={base.n} m={base.m} girth={girth(base)}")
    print(f"blow-up ({args.left},{args.f + 1}): n={g.n} m={g.m} girth={girth(g)}")
    h = ft_greedy(g, args.f, args.k, args.alg).spanner
    print(f"greedy f={args.f} k={args.k} ({args.alg}) keeps {h.m} of {g.m} edges")
    mode = "sampled" if args.sampled else "exhaustive"
    bad = verify_eft(g, g, args.f, args.k, mode, force=True)
    print(f"blow-up is an f-EFT spanner of itself ({mode}): {bad is None}")
    drops = 0
    for e in range(g.m):
        if verify_eft(g, g.subgraph(x for x in range(g.m) if x != e), args.f, args.k, mode, force=True):
            drops += 1
    print(f"edges whose removal breaks the property: {drops} of {g.m}")
    return 0 if h.m == g.m and bad is None and drops == g.m else 1


if __name__ == "__main__":
    sys.exit(main())
