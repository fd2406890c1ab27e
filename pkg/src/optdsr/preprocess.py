"""Triviality checks that bring an instance to the normal form s < |D| < k."""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, is_dominating, private_neighbors
from .tar import Instance, InvalidInstanceError, Move, Solution, TarSequence


@dataclass(frozen=True)
class AlreadySolution:
    target: frozenset
    prefix: TarSequence = ()

    def solution(self, method: str = "classify") -> Solution:
        return Solution(True, self.target, self.prefix, method)


@dataclass(frozen=True)
class NoSolution:
    prefix: TarSequence = ()

    def solution(self, method: str = "classify") -> Solution:
        return Solution.no(method)


@dataclass(frozen=True)
class Proceed:
    instance: Instance
    prefix: TarSequence = ()


def classify(inst: Instance):
    """Return AlreadySolution, NoSolution or Proceed (with s < |D| < k).

    When |D| = k and D is not minimal, the smallest-id vertex without a
    private neighbour is removed as a prefix move and the result re-checked.
    """
    g = inst.graph
    if not is_dominating(g, inst.start):
        raise InvalidInstanceError("start set is not dominating")
    d = inst.start
    prefix = []
    while True:
        if not (inst.s < len(d) <= inst.k):
            return AlreadySolution(d, tuple(prefix))
        if len(d) < inst.k:
            return Proceed(inst.with_start(d), tuple(prefix))
        removable = [v for v in sorted(d) if not private_neighbors(g, d, v)]
        if not removable:
            return NoSolution(tuple(prefix))
        v = removable[0]
        prefix.append(Move.remove(v))
        d = d - {v}


def instance_from_dominating_set_problem(g: Graph, s: int) -> Instance:
    return Instance(g, g.n, s, g.vertices)
