"""
Test finite posets: construction, sums, embeddings and autonomous subsets.
"""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus
from error_handler import ArityError, CycleError
from poset_core import (
    FinitePoset,
    antichain,
    autonomous_closure,
    build_poset,
    chain,
    chains_sum,
    crown,
    embeds_pattern,
    hasse_dot,
    incomparability_components,
    induced,
    is_embedding,
    is_isomorphic,
    is_prime,
    largest_autonomous_antichain,
    lex_sum,
    linear_sum,
    quotient_by_equiv,
    subset_properties,
)
from order_classify import traces
from strategies import posets


def n_poset() -> FinitePoset:
    """The N: 0 < 2, 1 < 2, 1 < 3."""
    return build_poset(4, [(0, 2), (1, 2), (1, 3)])


def test_build_poset_closes_transitively():
    P = build_poset(3, [(0, 1), (1, 2)])
    assert P.lt[0, 2]
    assert P.pairs() == [(0, 1), (0, 2), (1, 2)]
    assert P.cover_edges() == [(0, 1), (1, 2)]


def test_build_poset_rejects_cycles_and_bad_indices():
    with pytest.raises(CycleError):
        build_poset(3, [(0, 1), (1, 2), (2, 0)])
    with pytest.raises(IndexError):
        build_poset(2, [(0, 5)])


def test_finite_poset_rejects_non_orders():
    with pytest.raises(CycleError):
        FinitePoset(np.eye(2, dtype=bool))
    with pytest.raises(ValueError):
        # 0 < 1 < 2 without 0 < 2
        FinitePoset(np.array([[0, 1, 0], [0, 0, 1], [0, 0, 0]], dtype=bool))


def test_matrices_are_read_only():
    P = chain(3)
    with pytest.raises(ValueError):
        P.lt[0, 0] = True


def test_down_and_up_sets():
    P = chains_sum(2, 1)
    assert P.down(1) == frozenset({0})
    assert P.up(0) == frozenset({1})
    assert P.down(2) == frozenset() and P.up(2) == frozenset()


def test_sums():
    P = chains_sum(2, 2)
    assert P.n == 4
    assert P.pairs() == [(0, 1), (2, 3)]

    L = linear_sum(antichain(2), chain(1))
    assert L.lt[0, 2] and L.lt[1, 2] and not L.comparable[0, 1]

    with pytest.raises(ArityError):
        lex_sum(chain(2), [chain(1)])


def test_crown_is_standard_example():
    S = crown(3)
    assert S.n == 6
    assert S.label(0) == "a0" and S.label(3) == "b0"
    assert S.lt[0, 4] and not S.lt[0, 3]
    assert embeds_pattern(S, chains_sum(2, 2)).found


def test_embeds_pattern_finds_valid_witness():
    match = embeds_pattern(chain(4), chain(3))
    assert match.found
    assert is_embedding(chain(4), chain(3), match.witness)


def test_embeds_pattern_misses():
    assert not embeds_pattern(chains_sum(3, 1), chains_sum(2, 2)).found
    assert not embeds_pattern(chain(5), antichain(2)).found
    assert not embeds_pattern(chain(2), chain(3)).found
    assert embeds_pattern(chain(2), antichain(0)).found


def test_is_isomorphic():
    assert is_isomorphic(chains_sum(1, 2), chains_sum(2, 1))
    assert not is_isomorphic(chains_sum(2, 2), chains_sum(3, 1))


def test_incomparability_components_bottom_to_top():
    P = linear_sum(antichain(2), chain(1))
    parts, order = incomparability_components(P)
    assert parts == [frozenset({0, 1}), frozenset({2})]
    assert order.n == 2


def test_incomparability_components_of_chain_over_antichain():
    parts, order = incomparability_components(linear_sum(chain(2), antichain(2)))
    assert parts == [frozenset({0}), frozenset({1}), frozenset({2, 3})]
    assert order.same_order(chain(3))


def test_components_reassemble_every_small_poset():
    for P in corpus(5):
        parts, order = incomparability_components(P)
        rebuilt = lex_sum(order, [induced(P, part) for part in parts])
        assert is_isomorphic(rebuilt, P), repr(P)


def test_subset_properties():
    props = subset_properties(chains_sum(2, 1), [0, 1])
    assert props.autonomous and props.convex and props.chain
    assert not props.antichain

    # 0 < 1 < 2: {0, 2} skips 1
    assert not subset_properties(chain(3), [0, 2]).convex


def test_convex_subsets_of_a_chain_are_autonomous():
    C = chain(6)
    for size in range(7):
        for subset in itertools.combinations(range(6), size):
            props = subset_properties(C, subset)
            assert props.convex == props.autonomous, subset


def test_primality():
    assert is_prime(n_poset())
    assert not is_prime(chains_sum(2, 2))
    assert autonomous_closure(chain(3), [0, 1]) == frozenset({0, 1})
    assert autonomous_closure(n_poset(), [0, 1]) == frozenset(range(4))


def test_largest_autonomous_antichain_collects_twins():
    assert largest_autonomous_antichain(antichain(3), 0) == frozenset({0, 1, 2})
    assert largest_autonomous_antichain(chain(3), 1) == frozenset({1})


def test_quotient_of_antichain_trace_is_a_point():
    pred, _ = traces(antichain(3))
    Q, projection = quotient_by_equiv(pred)
    assert Q.n == 1
    assert projection == (0, 0, 0)


def test_hasse_dot_lists_covers_only():
    dot = hasse_dot(chain(3), "C")
    assert dot.startswith("digraph C {")
    assert "n0 -> n1;" in dot
    assert "n0 -> n2;" not in dot


@settings(max_examples=60, deadline=None)
@given(posets())
def test_built_posets_are_strict_orders(P):
    assert not P.lt.diagonal().any()
    assert not (P.lt & P.lt.T).any()


@settings(max_examples=60, deadline=None)
@given(posets(), st.data())
def test_every_induced_subposet_embeds(P, data):
    subset = data.draw(st.sets(st.integers(min_value=0, max_value=P.n - 1)))
    pattern = induced(P, subset)
    match = embeds_pattern(P, pattern)
    assert match.found
    assert is_embedding(P, pattern, match.witness)


@settings(max_examples=60, deadline=None)
@given(posets(), st.data())
def test_embedding_witnesses_compose(P, data):
    outer = sorted(data.draw(st.sets(st.integers(min_value=0, max_value=P.n - 1), min_size=1)))
    middle = induced(P, outer)
    inner = sorted(
        data.draw(st.sets(st.integers(min_value=0, max_value=middle.n - 1), min_size=1))
    )
    pattern = induced(middle, inner)

    first = embeds_pattern(middle, pattern)
    second = embeds_pattern(P, middle)
    assert first.found and second.found
    composed = tuple(second.witness[i] for i in first.witness)
    assert is_embedding(P, pattern, composed)
