"""Token addition/removal (TAR) moves, instances, solutions and sequence checking."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import Graph, is_dominating


class MoveKind(enum.Enum):
    ADD = "+"
    REMOVE = "-"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    vertex: int

    @classmethod
    def add(cls, v: int) -> "Move":
        return cls(MoveKind.ADD, v)

    @classmethod
    def remove(cls, v: int) -> "Move":
        return cls(MoveKind.REMOVE, v)

    def inverse(self) -> "Move":
        other = MoveKind.REMOVE if self.kind is MoveKind.ADD else MoveKind.ADD
        return Move(other, self.vertex)

    def __str__(self):
        return f"{self.kind.value}{self.vertex}"


TarSequence = tuple  # tuple[Move, ...]


class TarError(ValueError):
    """A sequence step broke the TAR(k) rule; ``step`` is the 0-based move index."""

    def __init__(self, step: int, message: str):
        super().__init__(f"step {step}: {message}")
        self.step = step


class IllegalMove(TarError):
    pass


class NotDominatingAtStep(TarError):
    pass


class SizeExceededAtStep(TarError):
    pass


class InvalidInstanceError(ValueError):
    pass


@dataclass(frozen=True)
class Instance:
    graph: Graph
    k: int
    s: int
    start: frozenset

    def __post_init__(self):
        object.__setattr__(self, "start", self.graph.check_set(self.start))
        if self.k < 0 or self.s < 0:
            raise InvalidInstanceError("k and s must be non-negative")
        if len(self.start) > self.k:
            raise InvalidInstanceError(f"|D|={len(self.start)} exceeds k={self.k}")
        if not is_dominating(self.graph, self.start):
            raise InvalidInstanceError("start set is not dominating")

    def with_start(self, start: Iterable) -> "Instance":
        return Instance(self.graph, self.k, self.s, frozenset(start))


@dataclass(frozen=True)
class Solution:
    yes: bool
    target: Optional[frozenset] = None
    witness: Optional[TarSequence] = None
    method: str = ""

    @classmethod
    def no(cls, method: str = "") -> "Solution":
        return cls(False, None, None, method)


def apply_move(s: frozenset, m: Move) -> frozenset:
    if m.kind is MoveKind.ADD:
        if m.vertex in s:
            raise ValueError(f"cannot add {m.vertex}: already present")
        return s | {m.vertex}
    if m.vertex not in s:
        raise ValueError(f"cannot remove {m.vertex}: not present")
    return s - {m.vertex}


def replay(start: Iterable, seq: Sequence) -> frozenset:
    cur = frozenset(start)
    for m in seq:
        cur = apply_move(cur, m)
    return cur


def validate_sequence(g: Graph, k: int, start: Iterable, seq: Sequence) -> frozenset:
    """Replay ``seq`` from ``start`` under TAR(k) and return the final set.

    Raises the matching :class:`TarError` subclass at the first failing move.
    """
    cur = g.check_set(start)
    if len(cur) > k:
        raise InvalidInstanceError(f"start has size {len(cur)} > k={k}")
    if not is_dominating(g, cur):
        raise InvalidInstanceError("start set is not dominating")
    for i, m in enumerate(seq):
        if not (0 <= m.vertex < g.n):
            raise IllegalMove(i, f"vertex {m.vertex} out of range")
        try:
            cur = apply_move(cur, m)
        except ValueError as exc:
            raise IllegalMove(i, str(exc)) from None
        if len(cur) > k:
            raise SizeExceededAtStep(i, f"size {len(cur)} exceeds k={k}")
        if m.kind is MoveKind.REMOVE and not is_dominating(g, cur):
            raise NotDominatingAtStep(i, f"removing {m.vertex} leaves a vertex undominated")
    return cur


def reverse_sequence(seq: Sequence) -> TarSequence:
    return tuple(m.inverse() for m in reversed(seq))


def moves_between(states: Sequence) -> TarSequence:
    """Moves realising a list of sets in which consecutive entries differ by one vertex."""
    out = []
    for a, b in zip(states, states[1:]):
        diff = a ^ b
        if len(diff) != 1:
            raise ValueError(f"sets {sorted(a)} and {sorted(b)} are not adjacent")
        (v,) = diff
        out.append(Move.add(v) if v in b else Move.remove(v))
    return tuple(out)


def states_of(start: Iterable, seq: Sequence) -> list:
    cur = frozenset(start)
    states = [cur]
    for m in seq:
        cur = apply_move(cur, m)
        states.append(cur)
    return states


def erase_loops(states: Sequence) -> list:
    """Drop repeated sets and the detours between repeats, keeping adjacency intact."""
    out = []
    index = {}
    for st in states:
        if st in index:
            cut = index[st] + 1
            for dropped in out[cut:]:
                del index[dropped]
            del out[cut:]
        else:
            index[st] = len(out)
            out.append(st)
    return out


def check_solution(inst: Instance, sol: Solution) -> None:
    """Assert-style re-validation used at solver boundaries."""
    if not sol.yes:
        return
    if sol.target is None or len(sol.target) > inst.s:
        raise AssertionError(f"bad target {sol.target} for s={inst.s}")
    if not is_dominating(inst.graph, sol.target):
        raise AssertionError("target is not dominating")
    if sol.witness is not None:
        end = validate_sequence(inst.graph, inst.k, inst.start, sol.witness)
        if end != sol.target:
            raise AssertionError("witness does not end at the target")
