"""Text formats.  All files use 1-indexed vertices and ``#`` comment lines.

Instance::

    p dsr <n> <m> <k> <s>
    e <u> <v>            (m lines)
    d <v1> <v2> ...

A vertex-cover reconfiguration instance uses ``p vcr`` with the same body.
Sequences are one ``+ <v>`` / ``- <v>`` per line; interval models are
``<id> <left> <right>`` per line.
"""

from __future__ import annotations

from .graph import Graph
from .oracle import VcrInstance
from .tar import Instance, Move, MoveKind


class FormatError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line.split()


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"line {lineno}: expected an integer, got {tok!r}") from None


def parse_instance_parts(text: str, kind: str = "dsr"):
    """Return ``(graph, k, s, start)`` from a ``p <kind>`` file."""
    header = None
    edges = []
    start = None
    for lineno, toks in _lines(text):
        tag = toks[0]
        if tag == "p":
            if header is not None:
                raise FormatError(f"line {lineno}: duplicate header")
            if len(toks) != 6 or toks[1] != kind:
                raise FormatError(f"line {lineno}: expected 'p {kind} n m k s'")
            header = [_int(t, lineno) for t in toks[2:]]
        elif header is None:
            raise FormatError(f"line {lineno}: content before header")
        elif tag == "e":
            if len(toks) != 3:
                raise FormatError(f"line {lineno}: expected 'e u v'")
            u, v = (_int(t, lineno) - 1 for t in toks[1:])
            if not (0 <= u < header[0] and 0 <= v < header[0]) or u == v:
                raise FormatError(f"line {lineno}: bad edge {toks[1]} {toks[2]}")
            edges.append((u, v))
        elif tag == "d":
            if start is not None:
                raise FormatError(f"line {lineno}: duplicate 'd' line")
            start = [_int(t, lineno) - 1 for t in toks[1:]]
            if any(not 0 <= v < header[0] for v in start):
                raise FormatError(f"line {lineno}: vertex out of range")
        else:
            raise FormatError(f"line {lineno}: unknown line type {tag!r}")
    if header is None:
        raise FormatError("missing header")
    n, m, k, s = header
    if start is None:
        raise FormatError("missing 'd' line")
    g = Graph.from_edges(n, edges)
    if g.m != m or len(edges) != m:
        raise FormatError(f"header says {m} edges, found {len(edges)} ({g.m} distinct)")
    return g, k, s, frozenset(start)


def _serialize(kind, g, k, s, start) -> str:
    lines = [f"p {kind} {g.n} {g.m} {k} {s}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.sorted_edges()]
    lines.append(" ".join(["d"] + [str(v + 1) for v in sorted(start)]))
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    g, k, s, start = parse_instance_parts(text, "dsr")
    try:
        return Instance(g, k, s, start)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_instance(inst: Instance) -> str:
    return _serialize("dsr", inst.graph, inst.k, inst.s, inst.start)


def parse_vcr_instance(text: str) -> VcrInstance:
    g, k, s, start = parse_instance_parts(text, "vcr")
    try:
        return VcrInstance(g, k, s, start)
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize_vcr_instance(inst: VcrInstance) -> str:
    return _serialize("vcr", inst.graph, inst.k, inst.s, inst.start)


def parse_sequence(text: str) -> tuple:
    out = []
    for lineno, toks in _lines(text):
        if len(toks) != 2 or toks[0] not in ("+", "-"):
            raise FormatError(f"line {lineno}: expected '+ v' or '- v'")
        v = _int(toks[1], lineno) - 1
        if v < 0:
            raise FormatError(f"line {lineno}: vertex ids start at 1")
        out.append(Move(MoveKind(toks[0]), v))
    return tuple(out)


def serialize_sequence(seq) -> str:
    return "".join(f"{m.kind.value} {m.vertex + 1}\n" for m in seq)


def parse_interval_model(text: str):
    from .classes import IntervalModel

    rows = {}
    for lineno, toks in _lines(text):
        if len(toks) != 3:
            raise FormatError(f"line {lineno}: expected '<id> <left> <right>'")
        v, a, b = (_int(t, lineno) for t in toks)
        if v - 1 in rows:
            raise FormatError(f"line {lineno}: duplicate id {v}")
        if a > b:
            raise FormatError(f"line {lineno}: left endpoint exceeds right")
        rows[v - 1] = (a, b)
    if sorted(rows) != list(range(len(rows))):
        raise FormatError("interval ids must be exactly 1..n")
    return IntervalModel(tuple(rows[v] for v in range(len(rows))))


def serialize_interval_model(model) -> str:
    return "".join(f"{v + 1} {a} {b}\n" for v, (a, b) in enumerate(model.intervals))
