"""Domination core and R1 kernel sizes on random graphs, next to the d*s^d bound.

    python3 scripts/kernel_stats.py --n 8,12,16,20 --p 0.2 --samples 20
"""

import argparse
import random
from dataclasses import dataclass
from statistics import mean

from optdsr.generate import greedy_dominating_set, random_graph
from optdsr.graph import degeneracy
from optdsr.kernel import kernel_size_bound, reduce_r1
from optdsr.tar import Instance


@dataclass
class Config:
    n: tuple = (8, 12, 16, 20)
    p: float = 0.2
    samples: int = 20
    seed: int = 3


def run(cfg):
    rng = random.Random(cfg.seed)
    print(" n   degen   |core|   kernel n   R1 removals   core<=d*s^d")
    for n in cfg.n:
        rows = []
        for _ in range(cfg.samples):
            g = random_graph(n, cfg.p, rng)
            d = greedy_dominating_set(g)
            if len(d) < 1:
                continue
            kern = reduce_r1(Instance(g, len(d) + 1, len(d) - 1, d))
            deg, _ = degeneracy(g)
            core_bound, _ = kernel_size_bound(deg, len(d) - 1)
            rows.append((deg, len(kern.core), kern.inst_k.graph.n,
                         len(kern.removed_log), len(kern.core) <= core_bound))
        cols = list(zip(*rows))
        print(f"{n:2d}  {mean(cols[0]):6.2f}  {mean(cols[1]):7.2f}  {mean(cols[2]):9.2f}"
              f"  {mean(cols[3]):12.2f}  {sum(cols[4]):5d}/{len(rows)}")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", default="8,12,16,20")
    ap.add_argument("--p", type=float, default=Config.p)
    ap.add_argument("--samples", type=int, default=Config.samples)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    run(Config(tuple(int(x) for x in args.n.split(",")), args.p, args.samples, args.seed))


if __name__ == "__main__":
    main()
