"""Seeded instance families for the CLI and the test corpora."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .graph import Graph, is_connected, is_dominating
from .preprocess import instance_from_dominating_set_problem
from .tar import Instance


@dataclass
class GenConfig:
    family: str = "random"  # random | tree | split | from-ds
    n: int = 10
    p: float = 0.3
    k: int | None = None  # default: |D| + 1
    s: int = 1
    seed: int = 0
    clique: int | None = None  # split family: size of the clique side
    max_tries: int = 1000


def greedy_dominating_set(g: Graph) -> frozenset:
    """Largest-closed-neighbourhood-first greedy, ties by smallest id."""
    undominated = set(range(g.n))
    chosen = set()
    while undominated:
        v = max(range(g.n), key=lambda x: (len(({x} | g.adj[x]) & undominated), -x))
        chosen.add(v)
        undominated -= {v} | g.adj[v]
    return frozenset(chosen)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(
        n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p]
    )


def random_connected_graph(n: int, p: float, rng: random.Random, max_tries: int = 1000) -> Graph:
    for _ in range(max_tries):
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g
    raise RuntimeError(f"no connected G({n}, {p}) sample in {max_tries} tries")


def random_tree(n: int, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [(v, rng.randrange(v)) for v in range(1, n)])


def random_forest(n: int, rng: random.Random, p_root: float = 0.2) -> Graph:
    edges = [(v, rng.randrange(v)) for v in range(1, n) if rng.random() >= p_root]
    return Graph.from_edges(n, edges)


def random_split_graph(n: int, clique: int, p: float, rng: random.Random) -> Graph:
    edges = list(itertools.combinations(range(clique), 2))
    for w in range(clique, n):
        nb = [a for a in range(clique) if rng.random() < p]
        if not nb and clique:
            nb = [rng.randrange(clique)]
        edges += [(w, a) for a in nb]
    return Graph.from_edges(n, edges)


def random_cograph(n: int, rng: random.Random) -> Graph:
    """Random cotree evaluation: repeatedly union or join two random pieces."""
    pieces = [(frozenset([v]), frozenset()) for v in range(n)]
    while len(pieces) > 1:
        i, j = sorted(rng.sample(range(len(pieces)), 2))
        (va, ea), (vb, eb) = pieces[i], pieces[j]
        e = ea | eb
        if rng.random() < 0.5:
            e |= {(min(a, b), max(a, b)) for a in va for b in vb}
        pieces[i] = (va | vb, e)
        del pieces[j]
    return Graph.from_edges(n, pieces[0][1] if pieces else ())


def random_interval_model(n: int, rng: random.Random, span: int | None = None):
    from .classes import IntervalModel

    span = span or 2 * n
    out = []
    for _ in range(n):
        a = rng.randrange(span)
        b = a + rng.randrange(max(2, span // 3))
        out.append((a, b))
    return IntervalModel(tuple(out))


def random_dominating_set(g: Graph, rng: random.Random, density: float = 0.5) -> frozenset:
    d = {v for v in range(g.n) if rng.random() < density}
    for v in rng.sample(range(g.n), g.n):
        if not ({v} | g.adj[v]) & d:
            d.add(v)
    assert is_dominating(g, d)
    return frozenset(d)


def generate(cfg: GenConfig, graph: Graph | None = None) -> Instance:
    rng = random.Random(cfg.seed)
    if cfg.family == "from-ds":
        g = graph if graph is not None else random_graph(cfg.n, cfg.p, rng)
        return instance_from_dominating_set_problem(g, cfg.s)
    if cfg.family == "random":
        g = random_connected_graph(cfg.n, cfg.p, rng, cfg.max_tries)
    elif cfg.family == "tree":
        g = random_tree(cfg.n, rng)
    elif cfg.family == "split":
        clique = cfg.clique if cfg.clique is not None else max(1, cfg.n // 2)
        g = random_split_graph(cfg.n, clique, cfg.p, rng)
    else:
        raise ValueError(f"unknown family {cfg.family!r}")
    d = greedy_dominating_set(g)
    k = cfg.k if cfg.k is not None else len(d) + 1
    return Instance(g, k, cfg.s, d)
