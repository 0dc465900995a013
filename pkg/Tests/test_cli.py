"""
Test the command-line verbs end to end through run().
"""

import pytest

from cli import EXIT_OK, EXIT_REFUTED, EXIT_USAGE, run

LEX_PLANE = """group zn 2
weights: 0 1; 1 0
threshold: (0,1)
window: -5..5 x -5..5
"""

Z_THETA_2 = """group zn 1
threshold: (2)
window: -8..8
"""


def test_classify_named_pattern(capsys):
    assert run(["classify", "3+1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "interval=yes semiorder=no" in out
    assert "forbidden: 3+1 at" in out


def test_classify_file_and_dot(write_input, tmp_path, capsys):
    path = write_input("chain.poset", "poset 3\n0 < 1 < 2\n")
    dot = tmp_path / "out" / "chain.dot"
    assert run(["classify", path, "--dot", str(dot)]) == EXIT_OK
    assert "chain=yes" in capsys.readouterr().out
    assert dot.read_text(encoding="utf-8").startswith("digraph")


def test_represent(capsys):
    assert run(["represent", "3+1"]) == EXIT_OK
    assert len(capsys.readouterr().out.splitlines()) == 4
    assert run(["represent", "2+2"]) == EXIT_REFUTED
    assert run(["represent", "--unit", "3+1"]) == EXIT_REFUTED


def test_dimension(capsys):
    assert run(["dimension", "2+2"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "dimension=2"


def test_critical_pairs_of_two_plus_two(capsys):
    assert run(["critical", "2+2"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("critical pairs: 2")


def test_realizer3(capsys):
    assert run(["realizer3", "2"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "threshold order on -8..8, alpha=2" in out
    assert "intersection equals order: yes" in out

    assert run(["realizer3", "2", "--window", "3"]) == EXIT_OK
    assert "threshold order on -3..3, alpha=2" in capsys.readouterr().out


def test_clifford_verbs(capsys):
    assert run(["clifford-reduce", "g(1) g(0)"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "+1*g(1/2) +1*g(1)"

    assert run(["clifford-cmp", "g(0)", "g(1)"]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "<"

    assert run(["clifford-probe", "g(0)", "--trials", "20"]) == EXIT_OK
    assert "is not normal" in capsys.readouterr().out

    assert run(["clifford-probe", "0", "--open", "--trials", "20"]) == EXIT_OK
    assert "no conjugation witness" in capsys.readouterr().out


def test_group_kai(write_input, capsys):
    path = write_input("lex_plane.group", LEX_PLANE)
    assert run(["group-kai", path]) == EXIT_OK
    assert "K={0}, A=span{(1,0)}, I=Z^2" in capsys.readouterr().out


def test_group_check_and_transfer(write_input, capsys):
    path = write_input("z.group", Z_THETA_2)
    assert run(["group-check", path, "--trials", "200"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "semiorder=yes" in out
    assert "threshold=yes" in out

    assert run(["group-transfer", path, "--max-n", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "n=2: 1+2 found=yes" in out
    assert "n=3: 1+3 found=no" in out
    assert "VIOLATION" not in out


def test_preceq_refuted(write_input, capsys):
    path = write_input("chain.poset", "poset 2\n0 < 1\n")
    assert run(["preceq", "2+2", path]) == EXIT_REFUTED
    assert "group: Z, natural order" in capsys.readouterr().out


def test_preceq_not_refuted(capsys):
    assert run(["preceq", "2+2", "3+1"]) == EXIT_OK
    assert "not refuted by 16 groups" in capsys.readouterr().out


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["classify"],
        ["classify", "missing.poset"],
        ["realizer3", "abc"],
        ["realizer3", "0"],
        ["clifford-reduce", "g(1) h(2)"],
        ["clifford-probe", "g(0)^-1"],
        ["realizer3", "2", "--window=-5..5"],
        ["realizer3", "2", "--window", "abc"],
        ["clifford-probe", "g(0)", "--trials", "-1"],
    ],
    ids=[
        "unknown-verb",
        "missing-input",
        "missing-file",
        "non-integer-alpha",
        "zero-alpha",
        "bad-word",
        "negative-anchor",
        "realizer-window-range",
        "realizer-window-text",
        "negative-trials",
    ],
)
def test_usage_errors(argv):
    assert run(argv) == EXIT_USAGE


@pytest.mark.parametrize(
    "verb,extra",
    [("group-inc0", []), ("group-kai", []), ("group-transfer", ["--max-n", "2"])],
)
def test_group_verbs_write_dot(write_input, tmp_path, verb, extra):
    path = write_input("z.group", Z_THETA_2)
    dot = tmp_path / f"{verb}.dot"
    assert run([verb, path, "--dot", str(dot), *extra]) == EXIT_OK
    text = dot.read_text(encoding="utf-8")
    assert text.startswith("digraph G")
    assert "->" in text


@pytest.mark.parametrize("max_n", ["1", "6"])
def test_group_transfer_rejects_max_n_out_of_range(write_input, max_n):
    path = write_input("z.group", Z_THETA_2)
    assert run(["group-transfer", path, "--max-n", max_n]) == EXIT_USAGE
