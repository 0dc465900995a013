"""
Test the poset and group text formats.
"""

from pathlib import Path

import pytest

from error_handler import ParsingError
from group_specs import LexProductGroup, LexSumGroup, OdotGroup, ZnGroup
from parsers import parse_group, parse_poset, parse_window, read_text
from poset_core import chains_sum

DATA = Path(__file__).resolve().parent.parent / "Data"

LEX_PLANE = """
# Z^2, second coordinate first
group zn 2
weights: 0 1; 1 0
threshold: (0,1) closed
window: -5..5 x -5..5
"""


def test_parse_poset():
    P = parse_poset("poset 4\n# three over one\n0 < 1 < 2\n")
    assert P.n == 4
    assert P.lt[0, 2]
    assert P.same_order(chains_sum(3, 1))


@pytest.mark.parametrize(
    "text",
    [
        "",
        "poset x\n0 < 1",
        "graph 2\n0 < 1",
        "poset 2\n0 < 1\n1 < 0",
        "poset 2\n0 < 5",
        "poset 3\n0 - 1",
    ],
    ids=["empty", "bad-size", "bad-header", "cycle", "out-of-range", "bad-edge"],
)
def test_parse_poset_rejects(text):
    with pytest.raises(ParsingError):
        parse_poset(text)


def test_read_text(write_input):
    path = write_input("p.poset", "poset 1\n")
    assert read_text(path) == "poset 1\n"
    assert read_text("poset 2\n0 < 1") == "poset 2\n0 < 1"
    with pytest.raises(ParsingError):
        read_text("missing.poset")


def test_parse_lex_plane_group():
    parsed = parse_group(LEX_PLANE)
    assert isinstance(parsed.spec, ZnGroup)
    assert parsed.spec.weights.rows == ((0, 1), (1, 0))
    assert parsed.spec.threshold.theta == (0, 1)
    assert parsed.spec.threshold.closed
    assert parsed.window.bounds == ((-5, 5), (-5, 5))


def test_parse_nested_groups():
    lexprod = parse_group("group lexprod 2\ngroup zn 1\nthreshold: (2)\n").spec
    assert isinstance(lexprod, LexProductGroup)
    assert lexprod.moduli() == (2, None)

    lexsum = parse_group("group lexsum 1\ngroup zn 1\nthreshold: (2) open\n").spec
    assert isinstance(lexsum, LexSumGroup)
    assert not lexsum.inner.threshold.closed

    odot = parse_group("group odot F=(1) closed alpha=(1)\ngroup zn 1\nthreshold: (1)\n").spec
    assert isinstance(odot, OdotGroup)
    assert odot.alpha == (1,)
    assert odot.dim == 2


def test_window_line_may_come_first():
    parsed = parse_group("window: 3\ngroup zn 1\nthreshold: (2)\n")
    assert parsed.window.bounds == ((-3, 3),)


@pytest.mark.parametrize(
    "text",
    [
        "group zn 2\nweights: 1 1; 1 1\nthreshold: (0,1)",
        "group zn 1",
        "group zn 1\nthreshold: (0)",
        "group zn 1\nweights: 1 0; 0 1\nthreshold: (1)",
        "group torus 2\nthreshold: (1,0)",
        "group zn 1\nthreshold: (1)\nthreshold: (2)",
        "group zn 1\nthreshold: (1)\nwindow: -2..2 x -2..2",
        "group odot F=(1) alpha=(1)\ngroup zn 1\nthreshold: (2)",
    ],
    ids=[
        "singular-weights",
        "missing-threshold",
        "non-positive-threshold",
        "dimension-mismatch",
        "unknown-kind",
        "trailing-line",
        "window-dimension",
        "unattained-alpha",
    ],
)
def test_parse_group_rejects(text):
    with pytest.raises(ParsingError):
        parse_group(text)


def test_parse_window():
    assert parse_window("-3..3 x 0..2").bounds == ((-3, 3), (0, 2))
    spec = parse_group("group lexprod 3\ngroup zn 1\nthreshold: (1)").spec
    assert parse_window("4", spec).bounds == ((0, 2), (-4, 4))


@pytest.mark.parametrize("text", ["4", "1..3", "a..b", "-1..1 y"])
def test_parse_window_rejects(text):
    with pytest.raises(ParsingError):
        parse_window(text)


@pytest.mark.parametrize("path", sorted(DATA.glob("*.poset")), ids=lambda p: p.name)
def test_sample_posets_parse(path):
    assert parse_poset(read_text(str(path))).n > 0


@pytest.mark.parametrize("path", sorted(DATA.glob("*.group")), ids=lambda p: p.name)
def test_sample_groups_parse(path):
    parsed = parse_group(read_text(str(path)))
    assert parsed.window is not None
    assert parsed.window.dim == parsed.spec.dim
