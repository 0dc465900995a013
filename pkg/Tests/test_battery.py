"""
Test the witness-group battery for P ⪯ Q.
"""

import pytest

from battery import NotRefuted, Refuted, default_battery, preceq_battery
from poset_core import antichain, chain, chains_sum

PATTERNS = {
    "2+2": chains_sum(2, 2),
    "3+1": chains_sum(3, 1),
    "1+3": chains_sum(1, 3),
}


def test_default_battery_size():
    groups = default_battery()
    assert len(groups) == 16
    assert groups[0].name == "Z, natural order"
    assert len({g.name for g in groups}) == len(groups)


def test_chain_does_not_force_two_plus_two():
    result = preceq_battery(chains_sum(2, 2), chain(2))
    assert isinstance(result, Refuted)
    assert result.group == "Z, natural order"
    assert len(result.q_witness) == 2


def test_two_chains_do_not_force_three():
    result = preceq_battery(antichain(3), antichain(2))
    assert isinstance(result, Refuted)
    assert result.group == "Z x Z/2, cone (m,0) m>=0"


@pytest.mark.parametrize(
    "p,q", [(p, q) for p in PATTERNS for q in PATTERNS if p != q]
)
def test_forbidden_patterns_are_not_separated(p, q):
    result = preceq_battery(PATTERNS[p], PATTERNS[q])
    assert isinstance(result, NotRefuted)
    assert len(result.tried) == 16


def test_battery_rejects_large_posets():
    with pytest.raises(ValueError):
        preceq_battery(chain(7), chain(1))
