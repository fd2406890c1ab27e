"""Canonical minimum dominating sets for forests, cographs and interval graphs."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, complement, connected_components, is_forest
from .preprocess import Proceed, classify
from .tar import Instance, Solution


class NotACograph(ValueError):
    pass


class EvidenceMismatch(ValueError):
    pass


# -- forests -------------------------------------------------------------------

@dataclass(frozen=True)
class Forest:
    """Rooted forest: ``parent[v]`` is None for roots; ``order`` is BFS order."""

    parent: tuple
    order: tuple

    @classmethod
    def of(cls, g: Graph) -> "Forest":
        if not is_forest(g):
            raise ValueError("graph is not a forest")
        parent = [None] * g.n
        order = []
        seen = set()
        for root in range(g.n):
            if root in seen:
                continue
            seen.add(root)
            queue = [root]
            i = 0
            while i < len(queue):
                v = queue[i]
                i += 1
                for u in sorted(g.adj[v]):
                    if u not in seen:
                        seen.add(u)
                        parent[u] = v
                        queue.append(u)
            order.extend(queue)
        return cls(tuple(parent), tuple(order))

    def edges(self) -> frozenset:
        return frozenset(
            (min(v, p), max(v, p)) for v, p in enumerate(self.parent) if p is not None
        )


def canonical_ds_tree(g: Graph, forest: Optional[Forest] = None) -> frozenset:
    """Minimum dominating set of a forest.

    Vertices are processed deepest first; an undominated vertex is covered by
    its parent (or by itself at a root), which pushes choices towards roots.
    """
    forest = forest or Forest.of(g)
    chosen = set()
    dominated = set()
    for v in reversed(forest.order):
        if v in dominated:
            continue
        p = forest.parent[v]
        w = v if p is None else p
        chosen.add(w)
        dominated.add(w)
        dominated |= g.adj[w]
    return frozenset(chosen)


# -- interval graphs -----------------------------------------------------------

@dataclass(frozen=True)
class IntervalModel:
    intervals: tuple  # intervals[v] = (left, right)

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple((int(a), int(b)) for a, b in self.intervals))
        for v, (a, b) in enumerate(self.intervals):
            if a > b:
                raise ValueError(f"interval {v} has left > right")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def graph(self) -> Graph:
        iv = self.intervals
        return Graph.from_edges(self.n, [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if iv[u][0] <= iv[v][1] and iv[v][0] <= iv[u][1]
        ])


def canonical_ds_interval(model: IntervalModel) -> frozenset:
    """Greedy: cover the undominated interval ending first by its farthest-reaching neighbour."""
    iv = model.intervals
    by_right = sorted(range(model.n), key=lambda v: (iv[v][1], v))
    chosen = set()
    dominated = set()
    for u in by_right:
        if u in dominated:
            continue
        lu, ru = iv[u]
        best = min(
            (w for w in range(model.n) if iv[w][0] <= ru and lu <= iv[w][1]),
            key=lambda w: (-iv[w][1], w),
        )
        chosen.add(best)
        lb, rb = iv[best]
        dominated.update(w for w in range(model.n) if iv[w][0] <= rb and lb <= iv[w][1])
    return frozenset(chosen)


# -- cographs ------------------------------------------------------------------

@dataclass(frozen=True)
class Cotree:
    kind: str  # "leaf" | "union" | "join"
    vertex: Optional[int] = None
    children: tuple = field(default=())

    def leaves(self) -> frozenset:
        if self.kind == "leaf":
            return frozenset((self.vertex,))
        return frozenset().union(*(c.leaves() for c in self.children))

    def edges(self) -> frozenset:
        if self.kind == "leaf":
            return frozenset()
        out = set()
        for c in self.children:
            out |= c.edges()
        if self.kind == "join":
            parts = [c.leaves() for c in self.children]
            for i, a in enumerate(parts):
                for b in parts[i + 1:]:
                    out |= {(min(u, v), max(u, v)) for u in a for v in b}
        return frozenset(out)

    def validate(self) -> None:
        if self.kind == "leaf":
            if self.vertex is None or self.children:
                raise ValueError("malformed cotree leaf")
            return
        if self.kind not in ("union", "join") or len(self.children) < 2:
            raise ValueError(f"malformed cotree node {self.kind!r}")
        seen = set()
        for c in self.children:
            c.validate()
            lv = c.leaves()
            if seen & lv:
                raise ValueError("cotree leaves repeat")
            seen |= lv

    def __str__(self):
        if self.kind == "leaf":
            return str(self.vertex)
        name = "Union" if self.kind == "union" else "Join"
        return f"{name}({', '.join(map(str, self.children))})"


def build_cotree(g: Graph) -> Cotree:
    """Split recursively on components of G and of its complement."""
    co = complement(g)

    def build(vs: frozenset) -> Cotree:
        if len(vs) == 1:
            (v,) = vs
            return Cotree("leaf", v)
        comps = connected_components(g, vs)
        if len(comps) > 1:
            return Cotree("union", children=tuple(build(c) for c in comps))
        cocomps = connected_components(co, vs)
        if len(cocomps) > 1:
            return Cotree("join", children=tuple(build(c) for c in cocomps))
        raise NotACograph(f"induced subgraph on {sorted(vs)} is connected and co-connected")

    if g.n == 0:
        raise NotACograph("empty graph has no cotree")
    return build(frozenset(range(g.n)))


def canonical_ds_cograph(t: Cotree) -> frozenset:
    t.validate()

    def universal(node: Cotree) -> frozenset:
        if node.kind == "leaf":
            return frozenset((node.vertex,))
        if node.kind == "union":
            return frozenset()
        return frozenset().union(*(universal(c) for c in node.children))

    def mds(node: Cotree) -> frozenset:
        if node.kind == "leaf":
            return frozenset((node.vertex,))
        if node.kind == "union":
            return frozenset().union(*(mds(c) for c in node.children))
        uni = universal(node)
        if uni:
            return frozenset((min(uni),))
        a = min(node.leaves())
        rest = [c for c in node.children if a not in c.leaves()]
        b = min(min(c.leaves()) for c in rest)
        return frozenset((a, b))

    return mds(t)


# -- dispatch ------------------------------------------------------------------

def canonical_ds(g: Graph, evidence) -> frozenset:
    if isinstance(evidence, Forest):
        if evidence.edges() != g.edges or len(evidence.parent) != g.n:
            raise EvidenceMismatch("forest does not match the graph")
        return canonical_ds_tree(g, evidence)
    if isinstance(evidence, Cotree):
        evidence.validate()
        if evidence.leaves() != g.vertices or evidence.edges() != g.edges:
            raise EvidenceMismatch("cotree does not match the graph")
        return canonical_ds_cograph(evidence)
    if isinstance(evidence, IntervalModel):
        if evidence.graph() != g:
            raise EvidenceMismatch("interval model does not match the graph")
        return canonical_ds_interval(evidence)
    raise TypeError(f"unsupported evidence {type(evidence).__name__}")


def class_solve(inst: Instance, evidence) -> Solution:
    """Yes with the canonical set if it is small enough; no witness is built."""
    dc = canonical_ds(inst.graph, evidence)
    pre = classify(inst)
    if not isinstance(pre, Proceed):
        return pre.solution("class")
    if len(dc) <= inst.s:
        return Solution(True, dc, None, "class")
    return Solution.no("class")
