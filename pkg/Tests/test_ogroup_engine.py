"""
Test window checks on represented ordered groups.
"""

import pytest

import ogroup_engine
from error_handler import UnsupportedCarrier, WindowTooLarge
from group_specs import ConeGroup, Ordering, WeightOrderSpec, Window
from ogroup_engine import (
    classify_integer_cone,
    classify_window,
    compare_total,
    compatibility_sample,
    convex_subgroup_chain,
    cover_check,
    embeds_in_integer_threshold,
    exact_subgroups,
    group_le,
    group_lt,
    inc0,
    inc0_structure,
    integer_threshold_offsets,
    pattern_transfer_check,
    subgroups_KAI,
    trace_equality_check,
    transfer_witness,
    transfer_witness_back,
    validate_cone,
    verify_threshold,
    weak_order_check,
    window_poset,
)
from poset_core import PatternMatch, antichain, chain, chains_sum

from ground_truth import lex_plane_inc0
from instances import GROUP_INSTANCES, integer_group, lex_plane_group, lexprod_group


def test_group_comparisons():
    spec = integer_group(2)
    assert group_lt(spec, (0,), (2,))
    assert not group_lt(spec, (0,), (1,))
    assert group_le(spec, (3,), (3,))
    assert compare_total(WeightOrderSpec.identity(1), (1,), (0,)) is Ordering.GREATER


def test_window_poset_labels_and_cap():
    P, index = window_poset(integer_group(2), Window.cube(1, 2))
    assert P.n == 5
    assert P.label(index[(0,)]) == "(0)"
    assert P.lt[index[(-2,)], index[(0,)]]
    with pytest.raises(WindowTooLarge):
        window_poset(integer_group(2), Window.cube(1, 8), cap=10)


def test_lex_plane_inc0_matches_the_formula():
    window = Window.cube(2, 4)
    assert set(inc0(lex_plane_group(), window)) == lex_plane_inc0(window)


def test_subgroups_of_integer_threshold():
    report = subgroups_KAI(integer_group(2), Window.cube(1, 8))
    assert (str(report.K), str(report.A), str(report.I)) == ("{0}", "{0}", "Z")
    assert report.exact
    assert report.consistent


def test_subgroups_of_lex_plane():
    report = subgroups_KAI(lex_plane_group(), Window.cube(2, 5))
    assert (str(report.K), str(report.A), str(report.I)) == ("{0}", "span{(1,0)}", "Z^2")
    assert report.consistent
    assert report.margin == 1


def test_natural_order_has_trivial_subgroups():
    K, A, I, exact = exact_subgroups(integer_group(1))
    assert str(K) == str(A) == str(I) == "{0}"
    assert exact


def test_lexprod_subgroups_contain_the_factor():
    spec = lexprod_group(2, 2)
    report = subgroups_KAI(spec, Window.for_group(spec, 4))
    assert str(report.K) == "Z/2 x {0}"
    assert str(report.I) == "Z/2 x Z"
    assert (1, 0) in report.K
    assert not report.exact
    assert report.consistent


def test_cone_carriers_have_no_subgroup_formulas():
    spec = ConeGroup(name="Z, x >= 0", torsion=(None,), member=lambda x: x[0] >= 0)
    with pytest.raises(UnsupportedCarrier):
        exact_subgroups(spec)


def test_threshold_groups_pass_window_checks():
    spec = integer_group(2)
    window = Window.cube(1, 8)
    assert verify_threshold(spec, window).is_threshold
    assert trace_equality_check(spec, window).equal
    assert cover_check(spec, window).ok
    result = classify_window(spec, window)
    assert result.is_interval and result.is_semiorder


def test_lex_plane_is_threshold_on_window():
    report = verify_threshold(lex_plane_group(), Window.cube(2, 4))
    assert report.matches_auxiliary is True
    assert report.is_threshold


def test_inc0_structure_of_integer_threshold():
    report = inc0_structure(integer_group(2), Window.cube(1, 8))
    assert report.size == 2
    assert report.bipartite
    assert report.isolated == []
    assert report.semiorder_matches and report.threshold_matches


def test_weak_order_check():
    natural = lexprod_group(2, 1)
    report = weak_order_check(natural, Window.for_group(natural, 6))
    assert report.inc0_antichain and report.closed_under_subtraction and report.window_weak

    report = weak_order_check(integer_group(2), Window.cube(1, 6))
    assert report.agree
    assert not report.inc0_antichain


def test_compatibility_sample_on_lex_plane():
    report = compatibility_sample(lex_plane_group(), Window.cube(2, 3), 300, seed=1)
    assert report.ok
    assert report.comparable > 0


def test_validate_cone():
    assert validate_cone(lambda x: x[0] >= 0, Window.cube(1, 5)).ok
    report = validate_cone(lambda x: True, Window.cube(1, 5))
    assert not report.antisymmetric
    assert report.failures


def test_transfer_witness_both_ways():
    spec = integer_group(2)
    xs, ys = transfer_witness(spec, (0,), [(-1,), (1,)], 1)
    assert xs == [(-2,), (0,)]
    assert ys == [(-1,)]

    zero, chain_points = transfer_witness_back(spec, xs, ys)
    assert zero == (0,)
    assert len(chain_points) == 2


@pytest.mark.parametrize("n,expected", [(2, True), (3, False)])
def test_pattern_transfer_on_integer_threshold(n, expected):
    report = pattern_transfer_check(integer_group(2), Window.cube(1, 8), n)
    assert report.one_plus_n is expected
    assert report.co_occur
    assert not report.violation


def test_pattern_transfer_rejects_large_n():
    with pytest.raises(ValueError):
        pattern_transfer_check(integer_group(2), Window.cube(1, 4), 6)


def test_classify_integer_cone():
    assert classify_integer_cone(lambda x: x >= 3, 10).shape == "a+N"
    assert classify_integer_cone(lambda x: x <= -2, 10).a == 2
    assert classify_integer_cone(lambda x: False, 10).shape == "empty"
    other = classify_integer_cone(lambda x: x > 0 and x % 2 == 0, 10)
    assert not other.is_semiorder


def test_integer_threshold_offsets():
    offsets = integer_threshold_offsets(chain(3), 2)
    assert offsets is not None
    assert offsets[1] - offsets[0] >= 2 and offsets[2] - offsets[1] >= 2

    assert not embeds_in_integer_threshold(antichain(3), 2)
    assert embeds_in_integer_threshold(antichain(3), 3)
    assert not embeds_in_integer_threshold(chains_sum(1, 3), 3)
    assert embeds_in_integer_threshold(chains_sum(1, 2), 2)


def test_pattern_transfer_recomputes_constructions_after_growing(monkeypatch):
    real_scan = ogroup_engine._transfer_scan
    calls = []

    def scan_missing_one_plus_n_first(P, n):
        ones, sums = real_scan(P, n)
        calls.append(P.n)
        if len(calls) == 1:
            return PatternMatch(False), sums
        return ones, sums

    monkeypatch.setattr(ogroup_engine, "_transfer_scan", scan_missing_one_plus_n_first)
    report = pattern_transfer_check(integer_group(2), Window.cube(1, 3), 2)

    assert calls == [7, 19]
    assert report.grown_window == "-9..9"
    assert report.one_plus_n and report.co_occur
    assert not report.violation
    assert report.one_plus_n_constructed
    assert all(row.constructed for row in report.rows)


@pytest.mark.parametrize("instance", GROUP_INSTANCES, ids=lambda i: i["name"])
def test_group_window_invariants(instance):
    spec = instance["build"]()
    window = Window.for_group(spec, instance["radius"])
    assert trace_equality_check(spec, window).equal
    assert cover_check(spec, window).ok
    compat = compatibility_sample(spec, window, 10_000, seed=0)
    assert compat.ok, compat.failures
    assert compat.comparable > 0


@pytest.mark.parametrize(
    "spec",
    [integer_group(2), integer_group(1), lex_plane_group()],
    ids=["z-theta-2", "z-natural", "lex-plane"],
)
def test_convex_subgroups_form_a_chain_around_a_and_i(spec):
    levels = convex_subgroup_chain(spec, Window.cube(spec.dim, 4))
    assert len(levels) == spec.dim + 1
    assert all(levels.values())


def test_convex_subgroup_chain_needs_a_zn_carrier():
    spec = lexprod_group(2, 2)
    with pytest.raises(UnsupportedCarrier):
        convex_subgroup_chain(spec, Window.for_group(spec, 3))
