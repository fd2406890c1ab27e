import json

import pytest
from hypothesis import given, settings

from strategies import instances
from test_formats import STAR_TEXT

from optdsr import formats
from optdsr.cli import EXIT_CAP, EXIT_NO, EXIT_PARSE, EXIT_YES, main, solve_instance
from optdsr.generate import GenConfig, generate
from optdsr.graph import is_connected
from optdsr.oracle import OracleCapExceeded, oracle_solve

OBS2_TEXT = "p dsr 4 4 2 1\ne 1 2\ne 2 3\ne 3 4\ne 1 4\nd 1 3\n"
C4_TEXT = "p dsr 4 4 3 2\ne 1 2\ne 2 3\ne 3 4\ne 1 4\nd 1 3\n"


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return _write


def test_solve_star(write, capsys):
    assert main(["solve", write("star.dsr", STAR_TEXT)]) == EXIT_YES
    out = capsys.readouterr().out
    assert "yes" in out and "target: 1\n" in out


def test_solve_writes_witness(write, tmp_path):
    wit = tmp_path / "w.seq"
    assert main(["solve", write("star.dsr", STAR_TEXT), "--strategy", "oracle",
                 "--witness", str(wit)]) == EXIT_YES
    inst = formats.parse_instance(STAR_TEXT)
    seq = formats.parse_sequence(wit.read_text())
    assert main(["validate", write("star2.dsr", STAR_TEXT), str(wit)]) == EXIT_YES
    assert len(seq) == 4 and inst.k == 4


def test_solve_observation2(write):
    assert main(["solve", write("c4.dsr", OBS2_TEXT)]) == EXIT_NO


def test_solve_malformed(write):
    assert main(["solve", write("bad.dsr", "p dsr 2\n")]) == EXIT_PARSE
    assert main(["solve", "/nonexistent/file.dsr"]) == EXIT_PARSE
    assert main(["frobnicate"]) == EXIT_PARSE


def test_solve_cap(write):
    path = write("star.dsr", STAR_TEXT)
    assert main(["solve", path, "--strategy", "oracle", "--cap", "3"]) == EXIT_CAP


def test_solve_each_strategy(write):
    path = write("star.dsr", STAR_TEXT)
    for strategy in ["auto", "oracle", "fpt-ds", "fpt-vc", "class"]:
        assert main(["solve", path, "--strategy", strategy]) == EXIT_YES


def test_solve_interval_evidence(write):
    path = write("p3.dsr", "p dsr 3 2 3 1\ne 1 2\ne 2 3\nd 1 3\n")
    ev = write("p3.iv", "1 0 1\n2 1 2\n3 2 3\n")
    assert main(["solve", path, "--strategy", "class", "--evidence", ev]) == EXIT_YES
    wrong = write("bad.iv", "1 0 1\n2 5 6\n3 2 3\n")
    assert main(["solve", path, "--strategy", "class", "--evidence", wrong]) == EXIT_PARSE


def test_validate_examples(write):
    inst = write("star.dsr", STAR_TEXT)
    assert main(["validate", inst, write("ok.seq", "+ 1\n- 2\n- 3\n- 4\n")]) == EXIT_YES
    tight = write("tight.dsr", STAR_TEXT.replace("p dsr 4 3 4 1", "p dsr 4 3 3 1"))
    assert main(["validate", tight, write("big.seq", "+ 1\n")]) == EXIT_NO
    assert main(["validate", inst, write("bad.seq", "- 2\n")]) == EXIT_NO


def test_validate_reports_step(write, capsys):
    inst = write("star.dsr", STAR_TEXT)
    main(["validate", inst, write("bad.seq", "+ 1\n- 2\n- 1\n")])
    assert "at step 2" in capsys.readouterr().err


def test_gen_from_ds_c4(write, tmp_path):
    out = tmp_path / "c4.dsr"
    assert main(["gen", "from-ds", "--graph", write("g.dsr", C4_TEXT), "--s", "2",
                 "--out", str(out)]) == EXIT_YES
    inst = formats.parse_instance(out.read_text())
    assert inst.graph == formats.parse_instance(C4_TEXT).graph
    assert (inst.k, inst.s, inst.start) == (4, 2, frozenset(range(4)))


def test_gen_is_deterministic(capsys):
    for family, extra in [("tree", ["--n", "8", "--seed", "1"]),
                          ("random", ["--n", "10", "--p", "0.3", "--seed", "7"]),
                          ("split", ["--n", "9", "--seed", "3"])]:
        main(["gen", family] + extra)
        first = capsys.readouterr().out
        main(["gen", family] + extra)
        assert capsys.readouterr().out == first
        formats.parse_instance(first)
    g = generate(GenConfig(family="random", n=10, p=0.3, seed=7)).graph
    assert is_connected(g)


def test_kernelize(write, tmp_path):
    k4 = "p dsr 4 6 4 0\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\nd 1 2 3\n"
    out, log = tmp_path / "k.dsr", tmp_path / "k.jsonl"
    assert main(["kernelize", write("k4.dsr", k4), "--out", str(out), "--log", str(log)]) == EXIT_YES
    assert formats.parse_instance(out.read_text()).graph.n == 2
    records = [json.loads(line) for line in log.read_text().splitlines()]
    assert [r["removed"] for r in records if r["type"] == "r1"] == [3, 4]
    assert main(["kernelize", write("star.dsr", STAR_TEXT.replace("4 1\n", "4 3\n", 1))]) == EXIT_YES


def test_reduce(write, tmp_path):
    vcr = write("k2.vcr", "p vcr 2 1 2 1\ne 1 2\nd 1\n")
    out, names = tmp_path / "o.dsr", tmp_path / "n.json"
    assert main(["reduce", "vcr-split", vcr, "--out", str(out), "--names", str(names)]) == EXIT_YES
    split = out.read_text()
    assert formats.parse_instance(split).graph.m == 3
    assert json.loads(names.read_text()) == {"3": "w0[0-1]"}
    assert main(["reduce", "vcr-gadget", vcr, "--out", str(out)]) == EXIT_YES
    path = write("split.dsr", split)
    assert main(["reduce", "split-bipartite", path, "--clique", "1,2", "--out", str(out)]) == EXIT_YES
    assert formats.parse_instance(out.read_text()).graph.n == 5
    assert main(["reduce", "split-bipartite", path]) == EXIT_PARSE
    assert main(["reduce", "ds-w2", write("k2.dsr", "p dsr 2 1 2 1\ne 1 2\nd 1\n"),
                 "--kprime", "1", "--out", str(out)]) == EXIT_YES
    inst = formats.parse_instance(out.read_text())
    assert (inst.graph.n, inst.k, inst.s, len(inst.start)) == (6, 3, 1, 2)


@settings(max_examples=300, deadline=None)
@given(instances(max_n=9))
def test_auto_matches_oracle(inst):
    assert solve_instance(inst, "auto").yes == oracle_solve(inst).yes


@settings(max_examples=100, deadline=None)
@given(instances(max_n=9))
def test_auto_above_cap_matches_oracle(inst):
    # force the fpt branches by lowering the cap below n; a kernel that is
    # still above the cap is a legitimate refusal
    try:
        sol = solve_instance(inst, "auto", cap=max(1, inst.graph.n - 1))
    except OracleCapExceeded:
        return
    assert sol.yes == oracle_solve(inst).yes
