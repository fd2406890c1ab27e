"""Undirected simple graphs on vertices 0..n-1 and the domination predicates.

Vertex sets are plain ``frozenset[int]``.  Every graph also carries bitmask
views of its neighbourhoods (``closed_masks``), which the state-space search
in :mod:`optdsr.oracle` uses directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

VertexSet = frozenset


class InvalidVertexError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset = frozenset()
    adj: tuple = field(init=False, repr=False, compare=False)
    closed_masks: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidVertexError(f"edge {e} out of range for n={self.n}")
            norm.add((min(u, v), max(u, v)))
        adj = [set() for _ in range(self.n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(frozenset(a) for a in adj))
        masks = []
        for v in range(self.n):
            m = 1 << v
            for u in adj[v]:
                m |= 1 << u
            masks.append(m)
        object.__setattr__(self, "closed_masks", tuple(masks))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def vertices(self) -> frozenset:
        return frozenset(range(self.n))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidVertexError(f"vertex {v!r} not in 0..{self.n - 1}")

    def check_set(self, s: Iterable) -> frozenset:
        s = frozenset(s)
        for v in s:
            self.check_vertex(v)
        return s


# -- bitmask helpers ---------------------------------------------------------

def to_mask(s: Iterable) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def from_mask(m: int) -> frozenset:
    out = []
    v = 0
    while m:
        if m & 1:
            out.append(v)
        m >>= 1
        v += 1
    return frozenset(out)


def dominated_mask(g: Graph, mask: int) -> int:
    cm = g.closed_masks
    out = 0
    v = 0
    while mask:
        if mask & 1:
            out |= cm[v]
        mask >>= 1
        v += 1
    return out


# -- neighbourhood algebra ---------------------------------------------------

def closed_neighborhood(g: Graph, v: int) -> frozenset:
    g.check_vertex(v)
    return g.adj[v] | {v}


def closed_neighborhood_set(g: Graph, s: Iterable) -> frozenset:
    s = g.check_set(s)
    out = set()
    for v in s:
        out.add(v)
        out |= g.adj[v]
    return frozenset(out)


def is_dominating(g: Graph, s: Iterable) -> bool:
    s = g.check_set(s)
    return dominated_mask(g, to_mask(s)) == (1 << g.n) - 1


def private_neighbors(g: Graph, d: Iterable, v: int) -> frozenset:
    """Vertices of N[v] whose only dominator in ``d`` is ``v`` (possibly ``v`` itself)."""
    d = g.check_set(d)
    if v not in d:
        raise ValueError(f"vertex {v} is not in the dominating set")
    return frozenset(
        u for u in closed_neighborhood(g, v)
        if (g.adj[u] | {u}) & d == {v}
    )


def is_minimal(g: Graph, d: Iterable) -> bool:
    d = g.check_set(d)
    if not is_dominating(g, d):
        raise ValueError("set is not dominating")
    return all(private_neighbors(g, d, v) for v in d)


def is_vertex_cover(g: Graph, s: Iterable) -> bool:
    s = g.check_set(s)
    return all(u in s or v in s for u, v in g.edges)


# -- structural helpers ------------------------------------------------------

def induced_subgraph(g: Graph, keep: Iterable) -> tuple:
    """Return ``(h, old_of_new)``; ``h`` is relabelled densely in ascending id order."""
    old_of_new = sorted(set(keep))
    new_of_old = {v: i for i, v in enumerate(old_of_new)}
    edges = [
        (new_of_old[u], new_of_old[v])
        for u, v in g.edges
        if u in new_of_old and v in new_of_old
    ]
    return Graph.from_edges(len(old_of_new), edges), tuple(old_of_new)


def complement(g: Graph) -> Graph:
    return Graph.from_edges(
        g.n,
        [(u, v) for u in range(g.n) for v in range(u + 1, g.n) if v not in g.adj[u]],
    )


def connected_components(g: Graph, within: Iterable | None = None) -> list:
    """Components of ``g`` (or of the subgraph induced by ``within``), smallest id first."""
    pool = set(range(g.n)) if within is None else set(within)
    comps = []
    for root in sorted(pool):
        if root not in pool:
            continue
        pool.discard(root)
        comp = [root]
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y in pool:
                    pool.discard(y)
                    comp.append(y)
                    stack.append(y)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def is_forest(g: Graph) -> bool:
    return g.m == g.n - len(connected_components(g))


def isolated_vertices(g: Graph) -> frozenset:
    return frozenset(v for v in range(g.n) if not g.adj[v])


def two_coloring(g: Graph) -> dict | None:
    color = {}
    for root in range(g.n):
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            x = stack.pop()
            for y in g.adj[x]:
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


# -- graph parameters --------------------------------------------------------

def degeneracy(g: Graph) -> tuple:
    """Min-degree peeling with a bucket queue; returns ``(d, ordering)``."""
    deg = [len(a) for a in g.adj]
    buckets = [set() for _ in range(max(deg, default=0) + 1)]
    for v, dv in enumerate(deg):
        buckets[dv].add(v)
    removed = [False] * g.n
    order = []
    d = 0
    lo = 0
    for _ in range(g.n):
        lo = max(lo - 1, 0)
        while not buckets[lo]:
            lo += 1
        v = min(buckets[lo])
        buckets[lo].discard(v)
        removed[v] = True
        d = max(d, lo)
        order.append(v)
        for u in g.adj[v]:
            if not removed[u]:
                buckets[deg[u]].discard(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)
    return d, order


def min_vertex_cover(g: Graph) -> frozenset:
    """Exact minimum vertex cover by degree-0/1 simplification and branching.

    Branches on a maximum-degree vertex v: either v is in the cover, or all
    of N(v) is.  A running incumbent prunes branches that cannot improve.
    """
    adj = {v: set(g.adj[v]) for v in range(g.n) if g.adj[v]}
    best = [frozenset(v for e in g.edges for v in e)]  # trivial cover

    def take(adj, vs):
        adj = {x: set(ys) for x, ys in adj.items()}
        for v in vs:
            for u in adj.pop(v, ()):
                nb = adj.get(u)
                if nb is not None:
                    nb.discard(v)
                    if not nb:
                        del adj[u]
        return adj

    def solve(adj, chosen):
        while True:
            if len(chosen) >= len(best[0]):
                return
            if not adj:
                best[0] = frozenset(chosen)
                return
            leaf = next((v for v in sorted(adj) if len(adj[v]) == 1), None)
            if leaf is None:
                break
            (u,) = adj[leaf]
            chosen = chosen | {u}
            adj = take(adj, [u])
        # each chosen vertex covers at most maxdeg edges
        maxdeg = max(len(ys) for ys in adj.values())
        m = sum(len(ys) for ys in adj.values()) // 2
        if len(chosen) + -(-m // maxdeg) >= len(best[0]):
            return
        v = min(adj, key=lambda x: (-len(adj[x]), x))
        nbrs = sorted(adj[v])
        solve(take(adj, [v]), chosen | {v})
        solve(take(adj, nbrs), chosen | set(nbrs))

    solve(adj, frozenset())
    return best[0]
