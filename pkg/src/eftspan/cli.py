"""Command-line front end.

Exit codes: 0 OK, 1 verification failure, 2 input error, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import blocking as blk
from .census import all_choke_sets, check_dispersion, count_paths
from .faults import BudgetExceeded
from .generators import blow_up, gen_random, gen_regular
from .graph import GraphError, read_graph, write_graph
from .greedy import ft_greedy
from .sweep import SweepConfig, monotone_in_f, run_sweep, write_sweep_csv
from .verify import verify_eft

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3
TRACE_SCHEMA = "eftspan.trace/v1"
DEFAULT_EXACT_BUDGET = 10**9


class InputError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load(path):
    try:
        return read_graph(path)
    except (OSError, GraphError) as exc:
        raise InputError(f"{path}: {exc}") from None


def write_trace(result, path) -> None:
    data = {
        "schema": TRACE_SCHEMA,
        "algorithm": result.algorithm,
        "f": result.f,
        "k": result.k,
        "kept": result.trace.kept,
        "source_ids": result.source_ids,
        "forcing": {str(e): sorted(fs) for e, fs in sorted(result.trace.forcing.items())},
    }
    with open(path, "w") as fh:
        json.dump(data, fh, indent=1, sort_keys=True)
        fh.write("\n")


def cmd_gen(args) -> int:
    if args.family == "random":
        if args.m is None:
            raise InputError("--m is required for the random family")
        weights = "unit" if args.weights == "unit" else ("uniform", args.lo, args.hi)
        g = gen_random(args.n, args.m, weights, args.seed)
    elif args.family == "regular":
        g = gen_regular(args.n, args.r, args.seed)
    else:
        if not args.input:
            raise InputError("--input is required for blowup")
        g = blow_up(_load(args.input), args.copies[0], args.copies[1])
    write_graph(g, args.out)
    print(f"wrote {g.n} nodes, {g.m} edges to {args.out}")
    return EXIT_OK


def cmd_build(args) -> int:
    g = _load(args.input)
    if args.alg == "exact" and not args.force:
        need = math.comb(g.m, min(args.f, g.m))
        if need > args.budget:
            print(f"refusing exact run: C({g.m}, {args.f}) = {need} exceeds budget {args.budget}; use --force",
                  file=sys.stderr)
            return EXIT_BUDGET
    res = ft_greedy(g, args.f, args.k, args.alg)
    if args.out:
        write_graph(res.spanner, args.out)
    if args.trace:
        write_trace(res, args.trace)
    if args.blocking:
        blk.write_blocking(blk.extract_blocking_set(res), args.blocking)
    print(f"|E(H)| = {res.spanner.m}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = _load(args.input)
    h = _load(args.spanner)
    try:
        bad = verify_eft(g, h, args.f, args.k, args.mode, trials=args.trials,
                         seed=args.seed, force=args.force)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    if bad is None:
        note = "" if args.mode == "exhaustive" else " (sampled, not a certificate)"
        print(f"OK{note}")
        return EXIT_OK
    print(bad.to_line())
    return EXIT_FAIL


def cmd_sweep(args) -> int:
    cfg = SweepConfig(ns=args.n, fs=args.f, ks=args.k, algorithms=args.alg.split(","),
                      family=args.family, density=args.density, degree=args.degree,
                      weights=args.weights, trials=args.trials, seed=args.seed,
                      workers=args.workers)
    rows = run_sweep(cfg)
    if args.out == "-":
        write_sweep_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            write_sweep_csv(rows, fh)
    worst = max((r["ratio"] for r in rows), default=0.0)
    drops = monotone_in_f(rows)
    print(f"cells={len(rows)} max_ratio={worst:.4g} ceiling={args.ceiling} "
          f"f-monotonicity-breaks={len(drops)}", file=sys.stderr)
    return EXIT_OK if worst < args.ceiling else EXIT_FAIL


def cmd_census(args) -> int:
    h = _load(args.input)
    try:
        b = blk.read_blocking(args.blocking, h)
    except (OSError, GraphError) as exc:
        raise InputError(f"{args.blocking}: {exc}") from None
    if args.reduce:
        h, b = blk.reduce_block_frequency(h, b, max(args.f, 1))
    top = b.max_frequency()
    choke_f = max(args.f, top) if args.reduce else args.f
    if top > choke_f:
        raise InputError(f"an edge lies in {top} blocks > f={args.f}; pass --reduce")
    report = None
    for j in range(1, args.k + 1):
        part = count_paths(h, b, j, force=args.force)
        if report is None:
            report = part
        else:
            report.counts.update(part.counts)
    if args.out:
        report.write_csv(args.out)
    chokes = all_choke_sets(h, b, args.k, choke_f)
    biggest = max((len(c) for c in chokes.values()), default=0)
    disp = check_dispersion(h, b, args.k, args.f, args.c)
    print(f"n={h.n} m={h.m} d={h.average_degree():.4g} blocks={len(b)} max_block_freq={top}")
    print(f"choke sets: max |F_st| = {biggest}, bound k*f+1 = {args.k * choke_f + 1}")
    print(disp.summary())
    ok = disp.ok and biggest <= args.k * choke_f + 1
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eftspan", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a generated graph file")
    g.add_argument("family", choices=["random", "regular", "blowup"])
    g.add_argument("--n", type=int, default=10)
    g.add_argument("--m", type=int)
    g.add_argument("--r", type=int, default=3)
    g.add_argument("--weights", choices=["unit", "uniform"], default="unit")
    g.add_argument("--lo", type=float, default=1.0)
    g.add_argument("--hi", type=float, default=10.0)
    g.add_argument("--input", help="bipartite base graph for blowup")
    g.add_argument("--copies", type=int, nargs=2, default=[1, 1], metavar=("LEFT", "RIGHT"))
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    b = sub.add_parser("build", help="run a greedy spanner construction")
    b.add_argument("--input", required=True)
    b.add_argument("--f", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--alg", choices=["exact", "approx"], default="exact")
    b.add_argument("--out", help="spanner graph file")
    b.add_argument("--trace", help="trace file (JSON)")
    b.add_argument("--blocking", help="strong blocking set file")
    b.add_argument("--budget", type=int, default=DEFAULT_EXACT_BUDGET,
                   help="refuse exact runs when C(m, f) exceeds this")
    b.add_argument("--force", action="store_true")
    b.set_defaults(func=cmd_build)

    v = sub.add_parser("verify", help="check the f-EFT (2k-1)-spanner property")
    v.add_argument("--input", required=True)
    v.add_argument("--spanner", required=True)
    v.add_argument("--f", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--mode", choices=["exhaustive", "sampled"], default="exhaustive")
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--force", action="store_true")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="spanner size vs. bound over a parameter grid")
    s.add_argument("--family", choices=["random", "regular"], default="random")
    s.add_argument("--n", type=_ints, default=[20, 40, 80])
    s.add_argument("--f", type=_ints, default=[0, 1, 2, 4])
    s.add_argument("--k", type=_ints, default=[2, 3])
    s.add_argument("--alg", default="exact", help="comma list of exact,approx")
    s.add_argument("--density", type=float, default=4.0)
    s.add_argument("--degree", type=int, default=6)
    s.add_argument("--weights", choices=["unit", "uniform"], default="uniform")
    s.add_argument("--trials", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--ceiling", type=float, default=10.0)
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("census", help="path counts, choke sets and dispersion")
    c.add_argument("--input", required=True, help="spanner graph file")
    c.add_argument("--blocking", required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--f", type=int, required=True)
    c.add_argument("--c", type=float, default=8.0)
    c.add_argument("--reduce", action="store_true", help="apply the block-frequency reduction first")
    c.add_argument("--out", help="census CSV")
    c.add_argument("--force", action="store_true")
    c.set_defaults(func=cmd_census)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        for alg in getattr(args, "alg", "exact").split(","):
            if alg not in ("exact", "approx"):
                raise InputError(f"unknown algorithm {alg!r}")
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
