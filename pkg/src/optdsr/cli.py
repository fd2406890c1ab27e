"""Command line: solve, validate, gen, kernelize, reduce.

Exit codes: 0 yes / success, 1 no / invalid sequence, 2 parse or usage
error, 3 oracle cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import formats
from .classes import EvidenceMismatch, Forest, NotACograph, build_cotree, class_solve
from .generate import GenConfig, generate
from .graph import is_forest, min_vertex_cover
from .kernel import fpt_ds_solve, reduce_r1
from .oracle import DEFAULT_CAP, OracleCapExceeded, oracle_solve
from .preprocess import Proceed, classify
from .reductions import ds_to_optdsr_w2, split_to_bipartite, vcr_to_gadget, vcr_to_split
from .tar import InvalidInstanceError, Solution, TarError, validate_sequence
from .vc import fpt_vc_solve

EXIT_YES, EXIT_NO, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _fmt_set(s) -> str:
    return " ".join(str(v + 1) for v in sorted(s))


def solve_instance(inst, strategy: str = "auto", evidence=None, cap: int = DEFAULT_CAP) -> Solution:
    if strategy == "oracle":
        return oracle_solve(inst, cap)
    if strategy == "fpt-ds":
        return fpt_ds_solve(inst, cap)
    if strategy == "fpt-vc":
        return fpt_vc_solve(inst, cap)
    if strategy == "class":
        if evidence is None:
            evidence = _class_evidence(inst.graph)
        return class_solve(inst, evidence)
    if strategy != "auto":
        raise ValueError(f"unknown strategy {strategy!r}")
    pre = classify(inst)
    if not isinstance(pre, Proceed):
        return pre.solution("auto/classify")
    if evidence is not None or is_forest(inst.graph):
        return class_solve(inst, evidence if evidence is not None else Forest.of(inst.graph))
    if inst.graph.n <= cap:
        return oracle_solve(inst, cap)
    if len(min_vertex_cover(inst.graph)) < inst.s:
        return fpt_vc_solve(inst, cap)
    return fpt_ds_solve(inst, cap)


def _class_evidence(g):
    if is_forest(g):
        return Forest.of(g)
    try:
        return build_cotree(g)
    except NotACograph:
        raise ValueError("class strategy needs a forest, a cograph, or --evidence") from None


def cmd_solve(args) -> int:
    inst = formats.parse_instance(_read(args.instance))
    evidence = None
    if args.evidence:
        evidence = formats.parse_interval_model(_read(args.evidence))
    sol = solve_instance(inst, args.strategy, evidence, args.cap)
    if not sol.yes:
        print("no")
        return EXIT_NO
    print("yes")
    print(f"target: {_fmt_set(sol.target)}")
    if sol.witness is not None:
        print(f"witness-length: {len(sol.witness)}")
        if args.witness:
            _write(args.witness, formats.serialize_sequence(sol.witness))
    elif args.witness:
        print("no witness available for this strategy", file=sys.stderr)
    return EXIT_YES


def cmd_validate(args) -> int:
    inst = formats.parse_instance(_read(args.instance))
    seq = formats.parse_sequence(_read(args.sequence))
    try:
        end = validate_sequence(inst.graph, inst.k, inst.start, seq)
    except TarError as exc:
        print(f"invalid: {type(exc).__name__} at step {exc.step}: {exc}", file=sys.stderr)
        return EXIT_NO
    print(f"valid: final set {_fmt_set(end)} (size {len(end)})")
    return EXIT_YES


def cmd_gen(args) -> int:
    cfg = GenConfig(family=args.family, n=args.n, p=args.p, k=args.k, s=args.s,
                    seed=args.seed, clique=args.clique)
    graph = None
    if args.family == "from-ds" and args.graph:
        graph = formats.parse_instance(_read(args.graph)).graph
    _write(args.out, formats.serialize_instance(generate(cfg, graph)))
    return EXIT_YES


def cmd_kernelize(args) -> int:
    inst = formats.parse_instance(_read(args.instance))
    pre = classify(inst)
    if not isinstance(pre, Proceed):
        print(f"instance is trivial ({type(pre).__name__}); nothing to kernelize", file=sys.stderr)
        return EXIT_YES if pre.solution().yes else EXIT_NO
    kern = reduce_r1(pre.instance)
    _write(args.out, formats.serialize_instance(kern.inst_k))
    records = [{"type": "prefix", "move": f"{m.kind.value} {m.vertex + 1}"}
               for m in pre.prefix + kern.prefix]
    records += [{"type": "r1", "removed": vr + 1, "kept": vl + 1} for vr, vl in kern.removed_log]
    records.append({"type": "core", "vertices": [v + 1 for v in sorted(kern.core)]})
    records.append({"type": "vertex_map", "kernel_to_original": [v + 1 for v in kern.vertex_map]})
    log = "".join(json.dumps(r) + "\n" for r in records)
    if args.log:
        Path(args.log).write_text(log)
    else:
        sys.stderr.write(log)
    return EXIT_YES


def cmd_reduce(args) -> int:
    if args.kind == "vcr-split":
        red = vcr_to_split(formats.parse_vcr_instance(_read(args.source)))
    elif args.kind == "vcr-gadget":
        red = vcr_to_gadget(formats.parse_vcr_instance(_read(args.source)))
    elif args.kind == "split-bipartite":
        inst = formats.parse_instance(_read(args.source))
        clique = {int(t) - 1 for t in args.clique.split(",")} if args.clique else None
        if clique is None:
            raise ValueError("split-bipartite needs --clique with the clique side")
        red = split_to_bipartite(inst, (clique, inst.graph.vertices - clique))
    else:
        g = formats.parse_instance(_read(args.source)).graph
        red = ds_to_optdsr_w2(g, args.kprime)
    _write(args.out, formats.serialize_instance(red.instance))
    names = {str(v + 1): name for v, name in sorted(red.names.items())}
    if args.names:
        Path(args.names).write_text(json.dumps(names, indent=1) + "\n")
    else:
        sys.stderr.write(json.dumps(names) + "\n")
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="optdsr", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance")
    p.add_argument("--strategy", default="auto",
                   choices=["auto", "oracle", "fpt-ds", "fpt-vc", "class"])
    p.add_argument("--evidence", help="interval model file for the class solver")
    p.add_argument("--witness", help="write the witness sequence here")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="oracle vertex cap")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("validate", help="check a TAR sequence against an instance")
    p.add_argument("instance")
    p.add_argument("sequence")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("family", choices=["random", "tree", "split", "from-ds"])
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--p", type=float, default=0.3)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--clique", type=int, default=None, help="split: clique size")
    p.add_argument("--graph", help="from-ds: take the graph from this instance file")
    p.add_argument("--out", "-o")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("kernelize", help="apply preprocessing and rule R1")
    p.add_argument("instance")
    p.add_argument("--out", "-o")
    p.add_argument("--log", help="JSON-lines log of prefix moves and R1 pairs")
    p.set_defaults(func=cmd_kernelize)

    p = sub.add_parser("reduce", help="run a hardness construction")
    p.add_argument("kind", choices=["vcr-split", "vcr-gadget", "split-bipartite", "ds-w2"])
    p.add_argument("source")
    p.add_argument("--clique", help="split-bipartite: comma-separated clique vertices")
    p.add_argument("--kprime", type=int, default=1, help="ds-w2: dominating set bound k'")
    p.add_argument("--out", "-o")
    p.add_argument("--names", help="write the JSON name map here")
    p.set_defaults(func=cmd_reduce)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_YES
    try:
        return args.func(args)
    except OracleCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (formats.FormatError, InvalidInstanceError, EvidenceMismatch, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
