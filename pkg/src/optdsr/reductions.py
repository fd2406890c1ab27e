"""Hardness constructions as instance transformers, plus witness projection.

New vertices always get ids above the source range; every builder returns a
``names`` map from new id to a readable label.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph
from .oracle import VcrInstance
from .tar import Instance, erase_loops, moves_between, states_of, validate_sequence


@dataclass(frozen=True)
class Reduced:
    instance: Instance
    names: dict = field(default_factory=dict)
    # gadget vertex -> (u, v): the source edge it stands for
    gadgets: dict = field(default_factory=dict)
    partition: tuple = ()


def vcr_to_split(inst: VcrInstance) -> Reduced:
    """Clique on the source vertices, one independent vertex per source edge.

    The source graph needs at least one edge; otherwise the empty cover has
    no dominating-set counterpart.
    """
    src = inst.graph
    n = src.n
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    names = {}
    gadgets = {}
    for i, (p, q) in enumerate(src.sorted_edges()):
        w = n + i
        edges += [(w, p), (w, q)]
        names[w] = f"w{i}[{p}-{q}]"
        gadgets[w] = (p, q)
    g = Graph.from_edges(n + src.m, edges)
    a = frozenset(range(n))
    b = frozenset(range(n, n + src.m))
    return Reduced(Instance(g, inst.k, inst.s, inst.start), names, gadgets, (a, b))


def vcr_to_gadget(inst: VcrInstance) -> Reduced:
    """A triangle per source edge; the source graph must have no isolated vertex."""
    src = inst.graph
    n = src.n
    edges = list(src.edges)
    names = {}
    gadgets = {}
    for i, (u, w) in enumerate(src.sorted_edges()):
        x = n + i
        edges += [(x, u), (x, w)]
        names[x] = f"v[{u}-{w}]"
        gadgets[x] = (u, w)
    g = Graph.from_edges(n + src.m, edges)
    return Reduced(Instance(g, inst.k, inst.s, inst.start), names, gadgets)


def is_split_partition(g: Graph, a: frozenset, b: frozenset) -> bool:
    if a & b or (a | b) != g.vertices:
        return False
    clique = all(v in g.adj[u] for u in a for v in a if u < v)
    return clique and all(not (g.adj[u] & b) for u in b)


def split_to_bipartite(inst: Instance, partition: tuple) -> Reduced:
    """Drop the clique edges, hang a pendant edge x-y with y joined to all of A."""
    a, b = (frozenset(p) for p in partition)
    g0 = inst.graph
    if not is_split_partition(g0, a, b):
        raise ValueError("partition is not a (clique, independent set) split")
    if not inst.start <= a:
        raise ValueError("start set must lie inside the clique side")
    x, y = g0.n, g0.n + 1
    edges = [(u, v) for u, v in g0.edges if not (u in a and v in a)]
    edges.append((x, y))
    edges += [(y, u) for u in a]
    g = Graph.from_edges(g0.n + 2, edges)
    out = Instance(g, inst.k + 1, inst.s + 1, inst.start | {y})
    return Reduced(out, {x: "x", y: "y"}, {}, (a | {x}, b | {y}))


def ds_to_optdsr_w2(src: Graph, kp: int) -> Reduced:
    """k'+1 copies of src plus a universal vertex, copies wired to copy 0.

    Copy j vertex i (i = 0 is the universal vertex, i >= 1 is source vertex
    i-1) gets id ``j*(n'+1) + i``.
    """
    if kp < 1:
        raise ValueError("k' must be at least 1")
    n1 = src.n + 1

    def vid(j, i):
        return j * n1 + i

    edges = []
    for j in range(kp + 1):
        edges += [(vid(j, 0), vid(j, i)) for i in range(1, n1)]
        edges += [(vid(j, u + 1), vid(j, v + 1)) for u, v in src.edges]
    for i in range(1, n1):
        for j in range(1, kp + 1):
            nbhd = {0, i} | {u + 1 for u in src.adj[i - 1]}
            edges += [(vid(0, i), vid(j, t)) for t in nbhd]
    g = Graph.from_edges(n1 * (kp + 1), edges)
    names = {vid(j, i): f"v{j},{i}" for j in range(kp + 1) for i in range(n1)}
    start = frozenset(vid(j, 0) for j in range(kp + 1))
    return Reduced(Instance(g, 2 * kp + 1, kp, start), names)


def project_sequence_gadget(inst: Instance, seq, gadgets: dict) -> tuple:
    """Rewrite a witness so it never uses a gadget vertex.

    Each set on the way has its gadget vertices swapped for the smaller
    endpoint of the defining edge (whose closed neighbourhood contains the
    gadget's); repeats and detours are then cut.  Returns
    ``(projected_start, moves)``.
    """
    validate_sequence(inst.graph, inst.k, inst.start, seq)

    def project(st: frozenset) -> frozenset:
        hits = st & gadgets.keys()
        if not hits:
            return st
        return (st - hits) | {min(gadgets[w]) for w in hits}

    states = erase_loops([project(st) for st in states_of(inst.start, seq)])
    return states[0], moves_between(states)
