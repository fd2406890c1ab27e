"""Shared test corpora: the exhaustive n <= 5 sweep and seeded random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from oracles import all_graphs, component_by_pairs, component_by_toggles, dominates, subsets, tau

from optdsr.generate import random_dominating_set, random_graph
from optdsr.graph import Graph, isolated_vertices
from optdsr.kernel import fpt_ds_solve
from optdsr.oracle import oracle_solve
from optdsr.tar import Instance, reverse_sequence, validate_sequence
from optdsr.vc import fpt_vc_solve

RANDOM_SEED = 20210301
RANDOM_COUNT = 1200


def sweep_groups(nmax=5):
    """Yield ``(g, k, D, expected)`` where ``expected(s)`` is the definitional verdict."""
    for n in range(1, nmax + 1):
        for g in all_graphs(n):
            doms = [d for d in subsets(n) if dominates(g, d)]
            for k in range(1, n + 1):
                # components of the explicit auxiliary graph at bound k
                comp_min = {}
                for d in doms:
                    if len(d) > k or d in comp_min:
                        continue
                    comp = component_by_pairs(g, k, d)
                    low = min(len(x) for x in comp)
                    for x in comp:
                        comp_min[x] = low
                for d in doms:
                    if len(d) <= k:
                        yield g, k, d, comp_min[d]


def low_cover_graph(n, rng):
    """Few hub vertices, the rest attached only to hubs: small vertex cover."""
    hubs = rng.randint(1, min(3, n))
    edges = [(u, v) for u in range(hubs) for v in range(u + 1, hubs) if rng.random() < 0.5]
    for w in range(hubs, n):
        nb = [h for h in range(hubs) if rng.random() < 0.5] or [rng.randrange(hubs)]
        edges += [(w, h) for h in nb]
    return Graph.from_edges(n, edges)


def random_instances(count=RANDOM_COUNT, seed=RANDOM_SEED, nmax=12):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(1, nmax)
        if len(out) % 4 == 3:
            g = low_cover_graph(n, rng)
        else:
            g = random_graph(n, rng.choice([0.15, 0.25, 0.4, 0.6]), rng)
        d = random_dominating_set(g, rng, rng.choice([0.3, 0.5, 0.8]))
        k = len(d) + rng.randint(0, 3)
        s = rng.randint(0, len(d))
        out.append(Instance(g, k, s, d))
    return out


@dataclass
class Tally:
    instances: int = 0
    mismatches: dict = field(default_factory=lambda: {"oracle": [], "fpt-ds": [], "fpt-vc": []})
    witness_failures: list = field(default_factory=list)
    reverse_failures: list = field(default_factory=list)
    witnesses_checked: int = 0
    vc_bound_checked: int = 0
    vc_bound_failures: list = field(default_factory=list)
    # instances where no reachable dominating set has size <= tau
    vc_bound_unattainable: list = field(default_factory=list)


def _hygiene(inst, sol, tally, who):
    if not sol.yes or sol.witness is None:
        return
    tally.witnesses_checked += 1
    try:
        end = validate_sequence(inst.graph, inst.k, inst.start, sol.witness)
        assert end == sol.target and len(end) <= inst.s
    except Exception as exc:  # noqa: BLE001 - recorded for the report
        tally.witness_failures.append((who, inst, repr(exc)))
        return
    try:
        back = validate_sequence(inst.graph, inst.k, sol.target, reverse_sequence(sol.witness))
        assert back == inst.start
    except Exception as exc:  # noqa: BLE001
        tally.reverse_failures.append((who, inst, repr(exc)))


def run_solvers(inst, low, tally, tau_g, isolated):
    """``low`` is the smallest set size in the start set's reachable component."""
    expected = low <= inst.s
    tally.instances += 1
    sols = {"oracle": oracle_solve(inst), "fpt-ds": fpt_ds_solve(inst), "fpt-vc": fpt_vc_solve(inst)}
    for who, sol in sols.items():
        if sol.yes != expected:
            tally.mismatches[who].append(inst)
        _hygiene(inst, sol, tally, who)
    if tau_g < inst.s and not isolated:
        vc = sols["fpt-vc"]
        tally.vc_bound_checked += 1
        if low > tau_g:
            tally.vc_bound_unattainable.append((inst, vc.yes))
        elif not vc.yes or len(vc.target) > tau_g:
            tally.vc_bound_failures.append(inst)


def sweep_tally(nmax=5):
    tally = Tally()
    tau_cache = {}
    for g, k, d, low in sweep_groups(nmax):
        if g not in tau_cache:
            tau_cache[g] = (tau(g), bool(isolated_vertices(g)))
        t, iso = tau_cache[g]
        for s in range(0, g.n + 1):
            run_solvers(Instance(g, k, s, d), low, tally, t, iso)
    return tally


def random_tally(instances):
    tally = Tally()
    for inst in instances:
        comp = component_by_toggles(inst.graph, inst.k, inst.start)
        low = min(len(x) for x in comp)
        run_solvers(inst, low, tally, tau(inst.graph), bool(isolated_vertices(inst.graph)))
    return tally
