"""
Test reduction, the order and final-segment probes in Clifford's group.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from clifford_group import (
    CliffordLetter,
    CliffordWord,
    FinalSegment,
    NoneFound,
    Witness,
    add,
    compare,
    conjugate,
    dominating_generator,
    format_element,
    g,
    identity,
    neg,
    oracle_is_identity,
    parse_element,
    parse_word,
    probe_final_segment_normality,
    reduce,
    sign,
    verify_swap_rule,
)
from error_handler import InvalidSegment, OracleUndecided, ParsingError
from group_specs import Ordering
from strategies import dyadics, elements, words

from ground_truth import CLIFFORD_REDUCTIONS


@pytest.mark.parametrize("word,expected", sorted(CLIFFORD_REDUCTIONS.items()))
def test_known_reductions(word, expected):
    assert format_element(reduce(parse_word(word))) == expected
    assert format_element(reduce(parse_word(word), "rightmost")) == expected


def test_defining_relation():
    assert reduce(parse_word("g(3) g(1)")) == reduce(parse_word("g(2) g(3)"))


def test_parse_word_expands_powers():
    word = parse_word("g(3/2) g(0)^-1 g(1)^2")
    assert len(word) == 4
    assert word.letters[1] == CliffordLetter(Fraction(0), -1)


def test_parse_word_takes_coefficients():
    assert parse_element("2*g(5)") == g(5, 2)
    assert parse_element("2·g(5)") == g(5, 2)
    assert parse_element("-1*g(1) +1*g(2)") == reduce(parse_word("g(1)^-1 g(2)"))
    assert len(parse_word("3*g(0)^-2")) == 6


@pytest.mark.parametrize("expected", sorted(set(CLIFFORD_REDUCTIONS.values())))
def test_normal_forms_parse_back(expected):
    assert format_element(parse_element(expected)) == expected


@pytest.mark.parametrize("text", ["g(1) h(2)", "g(1/0)", "g(1)^0", "g(1) extra", "0*g(1)"])
def test_parse_word_rejects_bad_text(text):
    with pytest.raises(ParsingError):
        parse_word(text)


def test_identity_round_trip():
    assert parse_element("0").is_identity
    assert format_element(identity()) == "0"
    assert sign(identity()) == 0


def test_compare_generators():
    assert compare(g(0), g(1)) is Ordering.LESS
    assert compare(g(1), g(1)) is Ordering.EQUAL
    assert compare(g(5, -1), identity()) is Ordering.LESS


def test_conjugation_by_a_higher_generator_moves_down():
    # g(1) g(-1) = g(0) g(1)
    assert conjugate(g(0), g(1)) == g(-1)


@settings(max_examples=60, deadline=None)
@given(words())
def test_reduction_strategies_agree(word):
    assert reduce(word, "leftmost") == reduce(word, "rightmost")


@settings(max_examples=60, deadline=None)
@given(words())
def test_reduction_measure_drops(word):
    reduce(word, check=True)


@settings(max_examples=40, deadline=None)
@given(elements(), elements(), elements())
def test_group_axioms(a, b, c):
    assert add(add(a, b), c) == add(a, add(b, c))
    assert add(a, neg(a)).is_identity
    assert add(a, identity()) == a


@settings(max_examples=40, deadline=None)
@given(elements(), elements(), elements())
def test_order_is_compatible_on_both_sides(a, b, c):
    if compare(a, b) is Ordering.GREATER:
        a, b = b, a
    if compare(a, b) is Ordering.LESS:
        assert compare(add(a, c), add(b, c)) is Ordering.LESS
        assert compare(add(c, a), add(c, b)) is Ordering.LESS


@settings(max_examples=40, deadline=None)
@given(elements())
def test_dominating_generator_is_above(a):
    assert compare(a, g(dominating_generator(a))) is Ordering.LESS


@settings(max_examples=40, deadline=None)
@given(dyadics(), dyadics())
def test_swap_rules_hold_for_every_sign(x, y):
    if x == y:
        return
    alpha, beta = max(x, y), min(x, y)
    for eps in (1, -1):
        for delta in (1, -1):
            assert verify_swap_rule(alpha, beta, eps, delta)


def test_oracle():
    word = parse_word("g(1) g(0)")
    assert oracle_is_identity(word + word.inverse())
    assert not oracle_is_identity(parse_word("g(1)"))
    with pytest.raises(OracleUndecided):
        oracle_is_identity(parse_word("g(0) g(1)^-1 g(2) g(3)^-1"))


@pytest.mark.parametrize(
    "anchor,closed", [("g(0)", True), ("g(0)", False), ("g(5)^2", True)]
)
def test_probe_finds_witnesses(anchor, closed):
    segment = FinalSegment(parse_element(anchor), closed)
    result = probe_final_segment_normality(segment, trials=50)
    assert isinstance(result, Witness)
    assert segment.contains(result.f)
    assert not segment.contains(result.result)
    assert conjugate(result.f, result.u) == result.result


def test_positive_cone_is_normal():
    result = probe_final_segment_normality(FinalSegment.positive_cone(), trials=50)
    assert isinstance(result, NoneFound)
    assert result.trials == 50


def test_probe_rejects_non_positive_anchor():
    with pytest.raises(InvalidSegment):
        probe_final_segment_normality(FinalSegment(g(0, -1)), trials=1)


def test_segment_str():
    assert str(FinalSegment(g(0))) == "{x >= +1*g(0)}"
    assert str(FinalSegment.positive_cone()) == "{x > 0}"


def test_word_inverse_cancels():
    word = CliffordWord((CliffordLetter(1), CliffordLetter(Fraction(1, 2), -1)))
    assert reduce(word + word.inverse()).is_identity
