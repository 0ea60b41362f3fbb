"""Parameter sweeps comparing measured spanner sizes with the size bound."""

from __future__ import annotations

import csv
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .generators import gen_random, gen_regular
from .greedy import ft_greedy

SWEEP_SCHEMA = "# schema: eftspan.sweep/v1"
COLUMNS = ["n", "f", "k", "algorithm", "seed", "edges", "bound", "ratio"]


def size_bound(n: int, f: int, k: int) -> float:
    """``k^2 f^(1/2 - 1/2k) n^(1+1/k) + kfn`` for odd k, ``k^2 f^(1/2) n^(1+1/k) + kfn``
    for even k, with constant 1. ``f = 0`` uses ``f^a = 1`` in the first term."""
    expo = 0.5 - 1 / (2 * k) if k % 2 else 0.5
    return k * k * max(f, 1) ** expo * n ** (1 + 1 / k) + k * f * n


@dataclass
class SweepConfig:
    ns: list[int] = field(default_factory=lambda: [20, 40, 80])
    fs: list[int] = field(default_factory=lambda: [0, 1, 2, 4])
    ks: list[int] = field(default_factory=lambda: [2, 3])
    algorithms: list[str] = field(default_factory=lambda: ["exact"])
    family: str = "random"
    density: float = 4.0  # edges per node for the random family
    degree: int = 6  # for the regular family
    weights: str = "uniform"
    trials: int = 1
    seed: int = 0
    workers: int = 1
    max_nodes: int | None = None


def graph_seed(cfg: SweepConfig, n: int, trial: int) -> int:
    # independent of f, k and algorithm so sweeps over f compare one graph
    return cfg.seed * 1_000_003 + n * 7919 + trial


def make_graph(cfg: SweepConfig, n: int, seed: int):
    if cfg.family == "random":
        m = min(int(round(cfg.density * n)), n * (n - 1) // 2)
        return gen_random(n, m, cfg.weights, seed)
    if cfg.family == "regular":
        return gen_regular(n, cfg.degree, seed)
    raise ValueError(f"unknown family {cfg.family!r}")


def _cell(args):
    cfg, n, f, k, alg, trial = args
    seed = graph_seed(cfg, n, trial)
    g = make_graph(cfg, n, seed)
    kw = {"max_nodes": cfg.max_nodes} if alg == "exact" else {}
    edges = ft_greedy(g, f, k, alg, **kw).spanner.m
    bound = size_bound(n, f, k)
    return {"n": n, "f": f, "k": k, "algorithm": alg, "seed": seed,
            "edges": edges, "bound": bound, "ratio": edges / bound}


def run_sweep(cfg: SweepConfig) -> list[dict]:
    cells = [(cfg, n, f, k, alg, trial)
             for n in cfg.ns for k in cfg.ks for f in cfg.fs
             for alg in cfg.algorithms for trial in range(cfg.trials)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            return list(pool.map(_cell, cells))
    return [_cell(c) for c in cells]


def write_sweep_csv(rows: list[dict], fh) -> None:
    fh.write(SWEEP_SCHEMA + "\n")
    w = csv.DictWriter(fh, COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({**r, "bound": f"{r['bound']:.6g}", "ratio": f"{r['ratio']:.6g}"})


def read_sweep_csv(fh) -> list[dict]:
    lines = [ln for ln in fh if not ln.startswith("#")]
    rows = []
    for r in csv.DictReader(lines):
        rows.append({"n": int(r["n"]), "f": int(r["f"]), "k": int(r["k"]),
                     "algorithm": r["algorithm"], "seed": int(r["seed"]),
                     "edges": int(r["edges"]), "bound": float(r["bound"]),
                     "ratio": float(r["ratio"])})
    return rows


def monotone_in_f(rows: list[dict], algorithm: str = "exact") -> list[tuple]:
    """Cells where the edge count drops as f grows (same n, k, seed)."""
    groups: dict[tuple, list[tuple[int, int]]] = {}
    for r in rows:
        if r["algorithm"] == algorithm:
            groups.setdefault((r["n"], r["k"], r["seed"]), []).append((r["f"], r["edges"]))
    bad = []
    for key, vals in groups.items():
        vals.sort()
        for (f1, e1), (f2, e2) in zip(vals, vals[1:]):
            if e2 < e1:
                bad.append(key + (f1, e1, f2, e2))
    return bad
