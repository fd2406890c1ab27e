"""FPT(d+s) pipeline: domination core, reduction rule R1, kernel solve, lifting."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, induced_subgraph, to_mask
from .oracle import DEFAULT_CAP, oracle_solve
from .preprocess import AlreadySolution, NoSolution, Proceed, classify
from .tar import Instance, Move, Solution, TarSequence, apply_move, check_solution


@dataclass(frozen=True)
class Kernel:
    """Reduced instance plus what is needed to map its answers back.

    ``vertex_map[i]`` is the original id of kernel vertex ``i``.  ``prefix``
    holds moves (in original ids) that take the input start set to ``D_k``.
    """

    inst_k: Instance
    prefix: TarSequence
    removed_log: tuple
    core: frozenset
    vertex_map: tuple

    def lift_set(self, s) -> frozenset:
        return frozenset(self.vertex_map[v] for v in s)

    def lift_moves(self, seq) -> TarSequence:
        return tuple(Move(m.kind, self.vertex_map[m.vertex]) for m in seq)


def core_elimination_applies(g: Graph, cand: frozenset, v: int) -> bool:
    """Some other candidate u has N[u] within N[v], so dominating u forces v."""
    nv = g.closed_masks[v]
    return any(
        g.closed_masks[u] & ~nv == 0 for u in cand if u != v
    )


def domination_core(g: Graph) -> frozenset:
    """A set C with: D dominates G iff C is within N[D], for every D.

    Iterated elimination; larger ids are tried first so that among twins the
    smallest id survives.
    """
    cand = set(range(g.n))
    changed = True
    while changed:
        changed = False
        for v in sorted(cand, reverse=True):
            if core_elimination_applies(g, cand, v):
                cand.discard(v)
                changed = True
    return frozenset(cand)


def clean_start(inst: Instance, v_r: int, v_l: int) -> tuple:
    """Moves taking D to a dominating set without ``v_r`` by leaning on ``v_l``."""
    d = inst.start
    if v_r == v_l or v_r not in d:
        raise ValueError("clean_start needs v_r in D and v_l != v_r")
    if v_l in d:
        moves = (Move.remove(v_r),)
    else:
        if len(d) >= inst.k:
            raise ValueError(f"cannot add {v_l}: |D| = k = {inst.k}")
        moves = (Move.add(v_l), Move.remove(v_r))
    for m in moves:
        d = apply_move(d, m)
    return d, moves


def _r1_pair(g: Graph, core: frozenset, alive: list):
    """First applicable (v_r, v_l) in the fixed scan order, or None."""
    cm = to_mask(core)
    outside = [v for v in alive if v not in core]
    traces = {v: g.closed_masks[v] & cm for v in outside}
    for v_r in outside:
        tr = traces[v_r]
        for v_l in outside:
            if v_l == v_r:
                continue
            tl = traces[v_l]
            if tr & ~tl:
                continue
            if tr == tl and v_r < v_l:
                continue
            return v_r, v_l
    return None


def reduce_r1(inst: Instance) -> Kernel:
    """Apply R1 exhaustively; the core of the input graph stays a core after deletions."""
    g = inst.graph
    core = domination_core(g)
    alive = list(range(g.n))
    d = inst.start
    prefix = []
    log = []
    while True:
        # N(v) & C is unaffected by deleting out-of-core vertices
        pair = _r1_pair(g, core, alive)
        if pair is None:
            break
        v_r, v_l = pair
        if v_r in d:
            cur = Instance(g, inst.k, inst.s, d)
            d, moves = clean_start(cur, v_r, v_l)
            prefix.extend(moves)
        alive.remove(v_r)
        log.append((v_r, v_l))
    g_k, vmap = induced_subgraph(g, alive)
    new_of_old = {v: i for i, v in enumerate(vmap)}
    d_k = frozenset(new_of_old[v] for v in d)
    inst_k = Instance(g_k, inst.k, inst.s, d_k)
    return Kernel(inst_k, tuple(prefix), tuple(log), core, vmap)


def exists_small_ds(g: Graph, s: int) -> bool:
    """Whether G has a dominating set of size at most ``s``.

    Branches over the dominators of the smallest-id undominated vertex, with a
    counting bound: one more vertex dominates at most (max degree + 1) others.
    """
    full = (1 << g.n) - 1
    cm = g.closed_masks
    reach = max((m.bit_count() for m in cm), default=1)
    seen = set()

    def go(dom: int, budget: int) -> bool:
        if dom == full:
            return True
        if budget == 0:
            return False
        missing = (full & ~dom).bit_count()
        if missing > budget * reach:
            return False
        key = (dom, budget)
        if key in seen:
            return False
        seen.add(key)
        u = ((full & ~dom) & -(full & ~dom)).bit_length() - 1
        m = cm[u]
        w = 0
        while m:
            if m & 1 and go(dom | cm[w], budget - 1):
                return True
            m >>= 1
            w += 1
        return False

    return go(0, s)


def kernel_size_bound(d: int, s: int):
    """``(core_bound, vertex_bound)`` = (d*s^d, d*s^d + 2^(d*s^d))."""
    c = d * s ** d
    return c, c + 2 ** c


def fpt_ds_solve(inst: Instance, cap: int = DEFAULT_CAP) -> Solution:
    """classify -> small-DS gate -> R1 kernel -> oracle on the kernel -> lift."""
    pre = classify(inst)
    if not isinstance(pre, Proceed):
        return pre.solution("fpt-ds")
    if not exists_small_ds(inst.graph, inst.s):
        return Solution.no("fpt-ds")
    kern = reduce_r1(pre.instance)
    head = pre.prefix + kern.prefix
    post = classify(kern.inst_k)
    if isinstance(post, NoSolution):
        return Solution.no("fpt-ds")
    if isinstance(post, AlreadySolution):
        sol = Solution(True, kern.lift_set(post.target),
                       head + kern.lift_moves(post.prefix), "fpt-ds")
    else:
        ksol = oracle_solve(post.instance, cap)
        if not ksol.yes:
            return Solution.no("fpt-ds")
        sol = Solution(True, kern.lift_set(ksol.target),
                       head + kern.lift_moves(post.prefix + ksol.witness), "fpt-ds")
    check_solution(inst, sol)
    return sol
