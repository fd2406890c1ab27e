"""Exact solver: breadth-first search over the reconfiguration graph.

Nodes are feasible sets of size at most k, encoded as bitmasks.  Neighbours
are generated on the fly by toggling one bit, so the state graph is never
materialised.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, dominated_mask, from_mask, is_vertex_cover, to_mask
from .tar import Instance, InvalidInstanceError, Solution, moves_between

DEFAULT_CAP = 20


class OracleCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class VcrInstance:
    graph: Graph
    k: int
    s: int
    start: frozenset

    def __post_init__(self):
        object.__setattr__(self, "start", self.graph.check_set(self.start))
        if len(self.start) > self.k:
            raise InvalidInstanceError(f"|C|={len(self.start)} exceeds k={self.k}")
        if not is_vertex_cover(self.graph, self.start):
            raise InvalidInstanceError("start set is not a vertex cover")


def _dominating_pred(g: Graph):
    full = (1 << g.n) - 1
    return lambda mask: dominated_mask(g, mask) == full


def _cover_pred(g: Graph):
    edge_masks = [(1 << u) | (1 << v) for u, v in g.edges]
    return lambda mask: all(mask & em for em in edge_masks)


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise OracleCapExceeded(f"graph has {g.n} vertices, oracle cap is {cap}")


def _bfs(n: int, k: int, start: int, feasible, stop=None):
    """Level-by-level BFS; returns ``(parents, hit)``.

    ``stop(level_nodes)`` may pick a node of the current level to halt on.
    """
    parent = {start: None}
    level = [start]
    while level:
        if stop is not None:
            hit = stop(level)
            if hit is not None:
                return parent, hit
        nxt = []
        for mask in level:
            size = mask.bit_count()
            for v in range(n):
                bit = 1 << v
                nb = mask ^ bit
                if nb in parent:
                    continue
                if not mask & bit and size + 1 > k:
                    continue
                if not feasible(nb):
                    continue
                parent[nb] = mask
                nxt.append(nb)
        level = nxt
    return parent, None


def _path(parent: dict, node: int) -> list:
    out = []
    while node is not None:
        out.append(from_mask(node))
        node = parent[node]
    out.reverse()
    return out


def _solve(g: Graph, k: int, s: int, start: frozenset, feasible, method: str) -> Solution:
    def stop(level):
        small = [m for m in level if m.bit_count() <= s]
        return min(small) if small else None

    parent, hit = _bfs(g.n, k, to_mask(start), feasible, stop)
    if hit is None:
        return Solution.no(method)
    states = _path(parent, hit)
    return Solution(True, states[-1], moves_between(states), method)


def oracle_solve(inst: Instance, cap: int = DEFAULT_CAP) -> Solution:
    """Shortest TAR(k) witness to a dominating set of size <= s, or No."""
    g = inst.graph
    _check_cap(g, cap)
    return _solve(g, inst.k, inst.s, inst.start, _dominating_pred(g), "oracle")


def reachable_sets(inst: Instance, cap: int = DEFAULT_CAP) -> set:
    g = inst.graph
    _check_cap(g, cap)
    parent, _ = _bfs(g.n, inst.k, to_mask(inst.start), _dominating_pred(g))
    return {from_mask(m) for m in parent}


def vcr_oracle_solve(inst: VcrInstance, cap: int = DEFAULT_CAP) -> Solution:
    g = inst.graph
    _check_cap(g, cap)
    return _solve(g, inst.k, inst.s, inst.start, _cover_pred(g), "vcr-oracle")
