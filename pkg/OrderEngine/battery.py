"""
Battery of witness groups for P ⪯ Q ("P embeds in every ordered group that Q embeds in").

Each group comes with a provable exclusion: a structural property that no
finite poset embedded in the group can lack. P ⪯ Q is refuted when some
window of a group embeds Q while the group provably excludes P. A pass over
the battery with no refutation proves nothing.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple, Union

import numpy as np

from error_handler import TheoremViolation
from group_specs import (
    ConeGroup,
    FinalSegmentSpec,
    GroupOrderSpec,
    WeightOrderSpec,
    Window,
    ZnGroup,
)
from ogroup_engine import embeds_in_integer_threshold, window_poset
from order_classify import incomparability_is_equivalence
from poset_core import FinitePoset, chains_sum, embeds_pattern

logger = logging.getLogger(__name__)

MAX_BATTERY_SIZE = 6


@dataclass(frozen=True)
class BatteryGroup:
    name: str
    spec: GroupOrderSpec
    radius: int
    excludes: Callable[[FinitePoset], bool]
    reason: str


@dataclass(frozen=True)
class Refuted:
    group: str
    reason: str
    q_witness: Tuple[str, ...]


@dataclass(frozen=True)
class NotRefuted:
    tried: Tuple[str, ...] = field(default_factory=tuple)


def integer_threshold(t: int) -> ZnGroup:
    """ℤ with x < y iff y - x >= t."""
    return ZnGroup(
        weights=WeightOrderSpec.identity(1),
        threshold=FinalSegmentSpec(theta=(t,), closed=True),
    )


# ============================================
# Structural exclusions
# ============================================


def _is_chain(P: FinitePoset) -> bool:
    return not P.incomparable.any()


def _chain_components(P: FinitePoset) -> Optional[int]:
    """Number of chains if P is a direct sum of chains, else None."""
    related = P.comparable | np.eye(P.n, dtype=bool)
    closed = (related.astype(np.int32) @ related.astype(np.int32)) > 0
    if (closed & ~related).any():
        return None
    return len({tuple(row) for row in related})


def _weak_levels(P: FinitePoset) -> Optional[int]:
    """Largest antichain level if P is a weak order, else None."""
    if not incomparability_is_equivalence(P):
        return None
    if P.n == 0:
        return 0
    return int(P.incomparable.sum(axis=1).max()) + 1


def _embeds_long_transfer(P: FinitePoset, n: int) -> bool:
    """Does P embed 1⊕(n+1) or some (q+1)⊕p with p + q = n + 1?"""
    if embeds_pattern(P, chains_sum(1, n + 1)).found:
        return True
    return any(embeds_pattern(P, chains_sum(n + 2 - p, p)).found for p in range(1, n + 1))


# ============================================
# Witness groups
# ============================================


def _direct_sum_of_chains(k: int) -> BatteryGroup:
    spec = ConeGroup(
        name=f"Z x Z/{k}, cone (m,0) m>=0",
        torsion=(None, k),
        member=lambda x: x[1] == 0 and x[0] >= 0,
        reach_hint=1,
    )

    def excludes(P: FinitePoset) -> bool:
        chains = _chain_components(P)
        return chains is None or chains > k

    return BatteryGroup(spec.name, spec, 8, excludes, f"not a direct sum of at most {k} chains")


def _lex_sum_of_antichains(k: int) -> BatteryGroup:
    spec = ConeGroup(
        name=f"Z x Z/{k}, cone (m,0) m>=0 or m>=1",
        torsion=(None, k),
        member=lambda x: (x[1] == 0 and x[0] >= 0) or x[0] >= 1,
        reach_hint=1,
    )

    def excludes(P: FinitePoset) -> bool:
        levels = _weak_levels(P)
        return levels is None or levels > k

    return BatteryGroup(
        spec.name, spec, 8, excludes, f"not a weak order with levels of at most {k} elements"
    )


def _transfer_group(n: int) -> BatteryGroup:
    """Embeds 1⊕n but not 1⊕(n+1)."""
    if n % 2 == 0:
        spec = ConeGroup(
            name=f"Z, cone generated by 2 and {n + 1}",
            torsion=(None,),
            member=lambda x: x[0] >= 0 and (x[0] % 2 == 0 or x[0] >= n + 1),
            reach_hint=n + 1,
        )
    else:
        p = (n - 1) // 2
        spec = ConeGroup(
            name=f"Z x Z/2, cone generated by (1,0) and ({p + 1},1)",
            torsion=(None, 2),
            member=lambda x: (x[1] == 0 and x[0] >= 0) or (x[1] == 1 and x[0] >= p + 1),
            reach_hint=p + 1,
        )
    return BatteryGroup(
        spec.name,
        spec,
        3 * (n + 1),
        lambda P: _embeds_long_transfer(P, n),
        f"embeds 1+{n + 1} or a (q+1)+p with p+q={n + 1}",
    )


def default_battery(max_size: int = MAX_BATTERY_SIZE) -> List[BatteryGroup]:
    total = integer_threshold(1)
    groups = [
        BatteryGroup("Z, natural order", total, max_size, lambda P: not _is_chain(P), "not a chain")
    ]
    for k in range(2, max_size + 1):
        groups.append(_direct_sum_of_chains(k))
    for k in range(2, max_size + 1):
        groups.append(_lex_sum_of_antichains(k))
    groups.append(
        BatteryGroup(
            "Z, cone {m >= 3}",
            integer_threshold(3),
            3 * max_size,
            lambda P: not embeds_in_integer_threshold(P, 3),
            "no integer positions with x < y iff r(y) - r(x) >= 3",
        )
    )
    for n in range(2, max_size):
        groups.append(_transfer_group(n))
    return groups


def preceq_battery(
    P: FinitePoset, Q: FinitePoset, battery: Optional[List[BatteryGroup]] = None
) -> Union[Refuted, NotRefuted]:
    for name, poset in (("P", P), ("Q", Q)):
        if poset.n > MAX_BATTERY_SIZE:
            raise ValueError(f"{name} has {poset.n} elements, battery handles at most {MAX_BATTERY_SIZE}")

    battery = battery if battery is not None else default_battery()
    tried = []
    for group in battery:
        tried.append(group.name)
        if not group.excludes(P):
            continue
        window = Window.for_group(group.spec, group.radius)
        host, _ = window_poset(group.spec, window)
        match = embeds_pattern(host, Q)
        if not match.found:
            logger.debug(f"{group.name}: Q not found in window {window}")
            continue
        if embeds_pattern(host, P).found:
            raise TheoremViolation(f"{group.name} window embeds P although P is excluded: {group.reason}")
        labels = tuple(host.label(i) for i in match.witness)
        logger.info(f"P ⪯ Q refuted by {group.name}")
        return Refuted(group.name, group.reason, labels)
    return NotRefuted(tuple(tried))
