"""
Test weight orders, final segments, group specs and windows.
"""

import pytest
from pydantic import ValidationError

from error_handler import DimensionError
from group_specs import (
    ConeGroup,
    FinalSegmentSpec,
    LexProductGroup,
    LexSumGroup,
    OdotGroup,
    Ordering,
    WeightOrderSpec,
    Window,
    ZnGroup,
    lattice_subgroup,
    lex_sign,
    product_subgroup,
    trivial,
    whole,
)

LEX_PLANE_ROWS = ((0, 1), (1, 0))


def zn(t: int, closed: bool = True) -> ZnGroup:
    return ZnGroup(
        weights=WeightOrderSpec.identity(1),
        threshold=FinalSegmentSpec(theta=(t,), closed=closed),
    )


def test_lex_sign():
    assert lex_sign([0, 0, 3]) == 1
    assert lex_sign([0, -1, 5]) == -1
    assert lex_sign([0, 0]) == 0


def test_weight_order_compares_by_rows():
    order = WeightOrderSpec(rows=LEX_PLANE_ROWS)
    # second coordinate decides first
    assert order.compare((5, 0), (0, 1)) is Ordering.LESS
    assert order.compare((1, 1), (0, 1)) is Ordering.GREATER
    assert order.compare((2, 3), (2, 3)) is Ordering.EQUAL


def test_weight_order_levels_and_least_positive():
    order = WeightOrderSpec(rows=LEX_PLANE_ROWS)
    assert order.least_positive() == (1, 0)
    assert order.level((3, 0)) == 1
    assert order.level((0, 1)) == 2
    assert order.level((0, 0)) == 0


def test_weight_order_rejects_singular_rows():
    with pytest.raises(ValidationError):
        WeightOrderSpec(rows=((1, 1), (1, 1)))
    with pytest.raises(ValidationError):
        WeightOrderSpec(rows=((1, 0),))


def test_weight_order_checks_dimension():
    with pytest.raises(DimensionError):
        WeightOrderSpec.identity(2).image((1, 2, 3))


def test_final_segment_contains_and_attained():
    order = WeightOrderSpec.identity(1)
    closed = FinalSegmentSpec(theta=(2,), closed=True)
    opened = FinalSegmentSpec(theta=(2,), closed=False)
    assert closed.contains(order, (2,)) and not opened.contains(order, (2,))
    assert closed.attained(order) == (2,)
    assert opened.attained(order) == (3,)


def test_threshold_must_be_positive():
    with pytest.raises(ValidationError):
        zn(0)
    with pytest.raises(ValidationError):
        zn(-1, closed=False)
    # {x > 0} is the positive cone itself
    assert zn(0, closed=False).attained_threshold() == (1,)


def test_zn_strict_matrix_matches_in_segment():
    spec = ZnGroup(
        weights=WeightOrderSpec(rows=LEX_PLANE_ROWS),
        threshold=FinalSegmentSpec(theta=(0, 1), closed=True),
    )
    points = Window.cube(2, 2).points()
    lt = spec.strict_matrix(points)
    for i, x in enumerate(points):
        for j, y in enumerate(points):
            if i != j:
                assert lt[i, j] == spec.in_segment(spec.sub(y, x))


def test_lexprod_reduces_the_factor():
    spec = LexProductGroup(factor=2, base=zn(2))
    assert spec.moduli() == (2, None)
    assert spec.normalize((3, 5)) == (1, 5)
    assert spec.neg((1, 4)) == (1, -4)
    assert spec.in_segment((1, 2)) and not spec.in_segment((1, 1))
    with pytest.raises(DimensionError):
        spec.normalize((1,))


def test_lexsum_outer_coordinate_decides():
    spec = LexSumGroup(outer=WeightOrderSpec.identity(1), inner=zn(2))
    assert spec.moduli() == (None, None)
    assert spec.in_segment((-10, 1))
    assert not spec.in_segment((1, 0))
    assert spec.in_segment((2, 0))


def test_odot_compares_base_then_segment():
    spec = OdotGroup(
        a_order=WeightOrderSpec.identity(1),
        segment=FinalSegmentSpec(theta=(1,), closed=True),
        base=zn(1),
        alpha=(1,),
    )
    assert spec.in_segment((-5, 2))
    assert spec.in_segment((1, 1)) and not spec.in_segment((0, 1))
    assert not spec.in_segment((5, 0))


def test_odot_requires_attained_alpha():
    with pytest.raises(ValidationError):
        OdotGroup(
            a_order=WeightOrderSpec.identity(1),
            segment=FinalSegmentSpec(theta=(1,), closed=True),
            base=zn(2),
            alpha=(1,),
        )


def test_cone_group_never_contains_zero():
    spec = ConeGroup(name="Z, x >= 0", torsion=(None,), member=lambda x: x[0] >= 0)
    assert not spec.in_segment((0,))
    assert spec.in_segment((3,))


def test_subgroup_descriptions():
    order = WeightOrderSpec(rows=LEX_PLANE_ROWS)
    assert str(lattice_subgroup(order, 0)) == "{0}"
    assert str(lattice_subgroup(order, 1)) == "span{(1,0)}"
    assert str(lattice_subgroup(order, 2)) == "Z^2"
    assert (4, 0) in lattice_subgroup(order, 1)
    assert (4, 1) not in lattice_subgroup(order, 1)

    product = product_subgroup([(1, whole(1, 2)), (1, trivial(1))])
    assert str(product) == "Z/2 x {0}"
    assert (1, 0) in product and (1, 1) not in product


def test_window_shapes():
    window = Window(bounds=((-2, 2), (-1, 1)))
    assert str(window) == "-2..2 x -1..1"
    assert window.size() == 15
    assert len(window.points()) == 15
    assert window.contains((2, -1)) and not window.contains((3, 0))
    assert window.is_interior((0, 0), 1, (None, None))
    assert not window.is_interior((2, 0), 1, (None, None))


def test_window_for_group_keeps_cyclic_factor():
    spec = LexProductGroup(factor=2, base=zn(2))
    window = Window.for_group(spec, 4)
    assert window.bounds == ((0, 1), (-4, 4))
    assert window.grow(2, spec.moduli()).bounds == ((0, 1), (-6, 6))


def test_window_must_contain_zero():
    with pytest.raises(ValidationError):
        Window(bounds=((1, 3),))
