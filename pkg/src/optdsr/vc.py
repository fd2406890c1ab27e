"""FPT(tau) solver built on a minimum vertex cover X and the independent rest I."""

from __future__ import annotations

from .graph import Graph, min_vertex_cover, private_neighbors
from .kernel import fpt_ds_solve
from .oracle import DEFAULT_CAP
from .preprocess import AlreadySolution, Proceed, classify
from .tar import Instance, Move, Solution, check_solution


def special_neighbors(g: Graph, x: frozenset, d: frozenset) -> dict:
    """Map each v in X \\ D to its smallest-id dominator in N[v] & D."""
    return {
        v: min(u for u in g.adj[v] if u in d)
        for v in sorted(x - d)
    }


def _apply_rules(g: Graph, x: frozenset, d: frozenset) -> tuple:
    """Run rules (i)/(ii) to a fixpoint; returns (final set, moves, special map)."""
    t_of = special_neighbors(g, x, d)
    moves = []
    while True:
        specials = set(t_of.values())
        for v in sorted(d - x):
            if v in specials or not g.adj[v]:
                continue
            if g.adj[v] & d:
                # rule (i): someone else already dominates v
                moves.append(Move.remove(v))
                d = d - {v}
            else:
                # rule (ii): bring in a cover neighbour first, then drop v
                u = min(g.adj[v])
                moves.extend((Move.add(u), Move.remove(v)))
                d = (d | {u}) - {v}
                t_of.pop(u, None)
            break
        else:
            return d, tuple(moves), t_of


def fpt_vc_solve(inst: Instance, cap: int = DEFAULT_CAP) -> Solution:
    pre = classify(inst)
    if isinstance(pre, AlreadySolution):
        return _improve(inst, pre)
    if not isinstance(pre, Proceed):
        return pre.solution("fpt-vc")
    work = pre.instance
    g = work.graph
    x = min_vertex_cover(g)
    if inst.s <= len(x):
        sol = fpt_ds_solve(work, cap)
        return _with_prefix(inst, sol, pre.prefix, "fpt-vc/ds")
    target, moves, _ = _apply_rules(g, x, work.start)
    if len(target) > inst.s:
        # only isolated vertices can push the rule output above s
        sol = fpt_ds_solve(work, cap)
        return _with_prefix(inst, sol, pre.prefix, "fpt-vc/ds")
    sol = Solution(True, target, pre.prefix + moves, "fpt-vc")
    check_solution(inst, sol)
    return sol


def _improve(inst: Instance, pre: AlreadySolution) -> Solution:
    """D is already small enough; when tau < s still run the rules so the
    target shrinks towards a set of size tau."""
    g = inst.graph
    x = min_vertex_cover(g)
    if inst.s <= len(x):
        return pre.solution("fpt-vc")
    d, prefix = pre.target, pre.prefix
    if len(d) == inst.k:
        # rule (ii) needs one spare token
        free = [v for v in sorted(d) if not private_neighbors(g, d, v)]
        if not free:
            return pre.solution("fpt-vc")
        prefix += (Move.remove(free[0]),)
        d = d - {free[0]}
    target, moves, _ = _apply_rules(g, x, d)
    sol = Solution(True, target, prefix + moves, "fpt-vc")
    check_solution(inst, sol)
    return sol


def _with_prefix(inst: Instance, sol: Solution, prefix, method: str) -> Solution:
    if not sol.yes:
        return Solution.no(method)
    out = Solution(True, sol.target, prefix + sol.witness, method)
    check_solution(inst, out)
    return out
