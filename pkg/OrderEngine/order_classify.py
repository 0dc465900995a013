"""
Traces, critical pairs and recognition of weak, interval, semi- and threshold orders.

Each recognition question is answered twice, once by forbidden patterns and once
by the trace quasi-orders. The two must agree; if they don't, that is a bug in
this package and CriteriaDisagreement is raised.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, List, Optional, Tuple

import numpy as np

from error_handler import CriteriaDisagreement
from poset_core import (
    FinitePoset,
    PatternMatch,
    QuasiOrder,
    embeds_pattern,
    named_patterns,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Classification:
    is_chain: bool
    is_weak: bool
    is_interval: bool
    is_semiorder: bool
    is_threshold: bool
    forbidden_witness: Optional[PatternMatch] = None
    forbidden_pattern: Optional[str] = None
    criteria_agree: bool = True


def traces(P: FinitePoset) -> Tuple[QuasiOrder, QuasiOrder]:
    """x <=_pred y iff D(x) ⊆ D(y);  x <=_succ y iff U(y) ⊆ U(x)."""
    L = P.lt.astype(np.int32)
    pred = (L.T @ (1 - L)) == 0
    succ = ((1 - L) @ L.T) == 0
    return QuasiOrder(pred), QuasiOrder(succ)


def _critical_matrix(P: FinitePoset, pred: QuasiOrder, succ: QuasiOrder) -> np.ndarray:
    return P.incomparable & pred.le & succ.le


def critical_pairs(P: FinitePoset) -> FrozenSet[Tuple[int, int]]:
    pred, succ = traces(P)
    crit = _critical_matrix(P, pred, succ)
    return frozenset((int(x), int(y)) for x, y in zip(*np.nonzero(crit)))


def incomparability_is_equivalence(P: FinitePoset) -> bool:
    """Is "incomparable or equal" transitive?"""
    rel = ~P.comparable
    closed = (rel.astype(np.int32) @ rel.astype(np.int32)) > 0
    return not (closed & ~rel).any()


def comparability_union_critical(P: FinitePoset) -> bool:
    """pred ∩ succ equals <= together with the critical pairs."""
    pred, succ = traces(P)
    both = pred.le & succ.le
    return bool(np.array_equal(both, P.le | _critical_matrix(P, pred, succ)))


def classify(P: FinitePoset) -> Classification:
    patterns = named_patterns()
    matches = {name: embeds_pattern(P, pattern) for name, pattern in patterns.items()}

    pred, succ = traces(P)
    both = pred.intersect(succ)

    interval_by_pattern = not matches["2+2"].found
    interval_by_trace = pred.is_total()
    if interval_by_pattern != interval_by_trace:
        raise CriteriaDisagreement(
            f"interval order: pattern test says {interval_by_pattern}, "
            f"pred totality says {interval_by_trace} on {P!r}"
        )

    semi_by_pattern = not (matches["2+2"].found or matches["3+1"].found)
    semi_by_trace = both.is_total()
    crit = _critical_matrix(P, pred, succ)
    semi_by_critical = not (P.incomparable & ~(crit | crit.T)).any()
    if not semi_by_pattern == semi_by_trace == semi_by_critical:
        raise CriteriaDisagreement(
            f"semiorder: patterns {semi_by_pattern}, pred∩succ totality "
            f"{semi_by_trace}, critical orientation {semi_by_critical} on {P!r}"
        )

    weak_by_pattern = not matches["1+2"].found
    weak_by_relation = incomparability_is_equivalence(P)
    if weak_by_pattern != weak_by_relation:
        raise CriteriaDisagreement(
            f"weak order: pattern test says {weak_by_pattern}, "
            f"equivalence test says {weak_by_relation} on {P!r}"
        )

    is_threshold = pred.equals(succ) and pred.is_antisymmetric() and pred.is_total()
    is_chain = not P.incomparable.any()

    witness_name = next((name for name in ("2+2", "3+1", "1+2") if matches[name].found), None)

    return Classification(
        is_chain=is_chain,
        is_weak=weak_by_pattern,
        is_interval=interval_by_pattern,
        is_semiorder=semi_by_pattern,
        is_threshold=bool(is_threshold),
        forbidden_witness=matches[witness_name] if witness_name else None,
        forbidden_pattern=witness_name,
        criteria_agree=True,
    )


def _heights(P: FinitePoset) -> List[int]:
    """Number of elements on the longest chain ending at each element."""
    height = [0] * P.n
    for x in sorted(range(P.n), key=lambda i: int(P.lt[:, i].sum())):
        below = np.flatnonzero(P.lt[:, x])
        height[x] = 1 + max((height[int(z)] for z in below), default=0)
    return height


def antichain_cover_number(P: FinitePoset) -> int:
    """Mirsky: least number of antichains covering P = longest chain length."""
    return max(_heights(P), default=0)


def mirsky_partition(P: FinitePoset) -> List[FrozenSet[int]]:
    height = _heights(P)
    levels = max(height, default=0)
    return [frozenset(x for x in range(P.n) if height[x] == h) for h in range(1, levels + 1)]
