"""Run every strategy on seeded random instances and report agreement and time.

    python3 scripts/solver_agreement.py --count 300 --nmax 12 --seed 1
"""

import argparse
import random
import time
from collections import defaultdict
from dataclasses import dataclass, fields

from optdsr.cli import solve_instance
from optdsr.generate import random_dominating_set, random_graph
from optdsr.tar import Instance, check_solution


@dataclass
class Config:
    count: int = 300
    nmax: int = 12
    seed: int = 1
    cap: int = 20


STRATEGIES = ("oracle", "fpt-ds", "fpt-vc", "auto")


def instances(cfg):
    rng = random.Random(cfg.seed)
    for _ in range(cfg.count):
        n = rng.randint(1, cfg.nmax)
        g = random_graph(n, rng.choice([0.15, 0.3, 0.5]), rng)
        d = random_dominating_set(g, rng, rng.choice([0.3, 0.6]))
        yield Instance(g, len(d) + rng.randint(0, 2), rng.randint(0, len(d)), d)


def run(cfg):
    spent = defaultdict(float)
    disagree = defaultdict(int)
    yes = total = 0
    for inst in instances(cfg):
        total += 1
        verdicts = {}
        for name in STRATEGIES:
            t0 = time.perf_counter()
            sol = solve_instance(inst, name, cap=cfg.cap)
            spent[name] += time.perf_counter() - t0
            check_solution(inst, sol)
            verdicts[name] = sol.yes
        yes += verdicts["oracle"]
        for name in STRATEGIES[1:]:
            disagree[name] += verdicts[name] != verdicts["oracle"]
    print(f"{total} instances, {yes} yes")
    for name in STRATEGIES:
        extra = "" if name == "oracle" else f"  disagreements {disagree[name]}"
        print(f"  {name:7s} {spent[name]:7.2f}s{extra}")
    return disagree


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for f in fields(Config):
        ap.add_argument(f"--{f.name}", type=type(f.default), default=f.default)
    run(Config(**vars(ap.parse_args())))


if __name__ == "__main__":
    main()
