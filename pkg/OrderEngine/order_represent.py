"""
Interval and unit-interval representations, the three-order realizer for
threshold orders with an attained threshold, and a brute-force dimension oracle.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Callable, Dict, Hashable, List, Mapping, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from error_handler import (
    InfeasibleSystem,
    InvalidKey,
    NonPositiveAlpha,
    NotIntervalOrder,
    NotSemiorder,
    TheoremViolation,
)
from order_classify import classify, traces
from poset_core import FinitePoset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntervalRepresentation:
    """intervals[x] = (left, right) for element x."""

    intervals: Tuple[Tuple[Fraction, Fraction], ...]

    def rebuild(self) -> FinitePoset:
        n = len(self.intervals)
        lt = np.zeros((n, n), dtype=bool)
        for x, (_, right) in enumerate(self.intervals):
            for y, (left, _) in enumerate(self.intervals):
                lt[x, y] = right < left
        return FinitePoset(lt)


@dataclass(frozen=True)
class UnitRepresentation:
    """x < y iff offsets[y] - offsets[x] >= threshold."""

    offsets: Tuple[Fraction, ...]
    threshold: Fraction = Fraction(1)

    def rebuild(self) -> FinitePoset:
        r = self.offsets
        n = len(r)
        lt = np.zeros((n, n), dtype=bool)
        for x in range(n):
            for y in range(n):
                lt[x, y] = r[y] - r[x] >= self.threshold
        return FinitePoset(lt)


@dataclass(frozen=True)
class Realizer:
    elements: Tuple[Hashable, ...]
    orders: Tuple[Tuple[Hashable, ...], ...]

    @property
    def k(self) -> int:
        return len(self.orders)

    def intersection(self) -> set:
        """Pairs (x, y), x != y, with x before y in every order."""
        positions = [{e: i for i, e in enumerate(order)} for order in self.orders]
        return {
            (x, y)
            for x in self.elements
            for y in self.elements
            if x != y and all(pos[x] < pos[y] for pos in positions)
        }

    def extends(self, relation: set) -> bool:
        positions = [{e: i for i, e in enumerate(order)} for order in self.orders]
        return all(pos[x] < pos[y] for pos in positions for x, y in relation)

    def realizes(self, relation: set) -> bool:
        """relation is the strict order as (x, y) pairs."""
        return self.extends(relation) and self.intersection() == set(relation)


@dataclass(frozen=True)
class Exceeded:
    max_k: int


def interval_representation(P: FinitePoset) -> IntervalRepresentation:
    """Left end: rank of D(x) among the distinct down-sets (a chain for interval
    orders). Right end: one less than the rank of the first down-set holding x."""
    result = classify(P)
    if not result.is_interval:
        raise NotIntervalOrder(f"embeds 2+2 at {result.forbidden_witness.witness}")

    down_sets = sorted({P.down(x) for x in range(P.n)}, key=len)
    rank = {d: i for i, d in enumerate(down_sets)}
    top = len(down_sets) - 1

    intervals = []
    for x in range(P.n):
        left = rank[P.down(x)]
        right = next((i - 1 for i, d in enumerate(down_sets) if x in d), top)
        intervals.append((Fraction(left), Fraction(right)))
    return IntervalRepresentation(tuple(intervals))


def _tighten(graph: nx.DiGraph, u, v, weight: Fraction):
    if graph.has_edge(u, v):
        weight = min(weight, graph[u][v]["weight"])
    graph.add_edge(u, v, weight=weight)


def unit_representation(P: FinitePoset) -> UnitRepresentation:
    """Solve the difference constraints
        r(y) - r(x) >= 1        for x < y
        0 <= r(y) - r(x) <= 1-ε for incomparable x ⊑ y in pred ∩ succ
    with ε = 1/(n+1), by Bellman-Ford from a virtual source."""
    result = classify(P)
    if not result.is_semiorder:
        raise NotSemiorder(
            f"embeds {result.forbidden_pattern} at {result.forbidden_witness.witness}"
        )

    n = P.n
    if n == 0:
        return UnitRepresentation(())

    pred, succ = traces(P)
    weak = pred.le & succ.le
    eps = Fraction(1, n + 1)

    source = "source"
    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    for v in range(n):
        graph.add_edge(source, v, weight=Fraction(0))
    for x in range(n):
        for y in range(n):
            if x == y:
                continue
            if P.lt[x, y]:
                _tighten(graph, y, x, Fraction(-1))
            elif weak[x, y] and not P.lt[y, x]:
                _tighten(graph, x, y, 1 - eps)
                _tighten(graph, y, x, Fraction(0))

    try:
        dist = nx.single_source_bellman_ford_path_length(graph, source, weight="weight")
    except nx.NetworkXUnbounded as e:
        raise InfeasibleSystem(f"negative cycle in unit constraints for {P!r}") from e

    low = min(dist[v] for v in range(n))
    rep = UnitRepresentation(tuple(Fraction(dist[v] - low) for v in range(n)))
    if not rep.rebuild().same_order(P):
        raise TheoremViolation(f"unit offsets {rep.offsets} do not reproduce {P!r}")
    return rep


# ============================================
# Dimension three realizer for threshold orders
# ============================================


def _block(key: Fraction, width: Fraction, start: Fraction) -> int:
    """Index b of the half-open block ]start + b*width, start + (b+1)*width]."""
    return math.ceil((key - start) / width) - 1


def _swap_order(key: Callable, alpha: Fraction, start: Fraction) -> Callable:
    """Comparator for blocks ]u, u+2α] with u = start + 2α·b. Inside a block,
    a lower-half x precedes an upper-half y iff x < y; halves keep key order."""
    width = 2 * alpha

    def compare(x, y) -> int:
        kx, ky = key(x), key(y)
        bx, by = _block(kx, width, start), _block(ky, width, start)
        if bx != by:
            return -1 if bx < by else 1
        middle = start + width * bx + alpha
        upper_x, upper_y = kx > middle, ky > middle
        if upper_x == upper_y:
            return -1 if kx < ky else 1
        if not upper_x:
            return -1 if ky - kx >= alpha else 1
        return 1 if kx - ky >= alpha else -1

    return compare


def realizer_dim3_threshold(
    elements: Sequence[Hashable],
    pred_key: Union[Callable[[Hashable], Fraction], Mapping[Hashable, Fraction]],
    alpha,
) -> Realizer:
    """Three linear extensions of x < y  <=>  key(y) - key(x) >= alpha whose
    intersection is that order."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise NonPositiveAlpha(f"alpha must be positive, got {alpha}")

    lookup = pred_key.__getitem__ if isinstance(pred_key, Mapping) else pred_key
    keys: Dict[Hashable, Fraction] = {e: Fraction(lookup(e)) for e in elements}
    if len(set(keys.values())) != len(keys) or len(keys) != len(elements):
        raise InvalidKey("pred_key must take distinct values on distinct elements")

    key = keys.__getitem__
    zero = Fraction(0)

    first = sorted(elements, key=lambda e: (_block(key(e), alpha, zero), -key(e)))
    second = sorted(elements, key=cmp_to_key(_swap_order(key, alpha, zero)))
    third = sorted(elements, key=cmp_to_key(_swap_order(key, alpha, alpha)))

    return Realizer(tuple(elements), (tuple(first), tuple(second), tuple(third)))


# ============================================
# Brute-force dimension
# ============================================


def _acyclic_with(P: FinitePoset, reversed_pairs: List[Tuple[int, int]]) -> bool:
    graph = P.digraph()
    graph.add_edges_from((y, x) for x, y in reversed_pairs)
    return nx.is_directed_acyclic_graph(graph)


def brute_force_dimension(P: FinitePoset, max_k: int = 4) -> Union[int, Exceeded]:
    """Least k such that k linear extensions intersect to P.

    Every incomparable ordered pair (x, y) must be reversed (y before x) by some
    extension. Branch on the first pair not yet reversed; the last extension
    only needs to exist, which is an acyclicity test."""
    pairs = [(int(x), int(y)) for x, y in zip(*np.nonzero(P.incomparable))]
    if not pairs:
        return 1

    bit = {pair: 1 << i for i, pair in enumerate(pairs)}
    masks = set()
    for order in nx.all_topological_sorts(P.digraph()):
        pos = {e: i for i, e in enumerate(order)}
        mask = 0
        for (x, y), b in bit.items():
            if pos[y] < pos[x]:
                mask |= b
        masks.add(mask)
    masks = sorted(masks)
    logger.debug(f"{len(masks)} linear extensions for {P.n} elements")

    full = (1 << len(pairs)) - 1
    memo: Dict[Tuple[int, int], bool] = {}

    def coverable(remaining: int, k: int) -> bool:
        if remaining == 0:
            return True
        if (remaining, k) in memo:
            return memo[(remaining, k)]
        if k == 1:
            todo = [pair for pair in pairs if remaining & bit[pair]]
            answer = _acyclic_with(P, todo)
        else:
            first = remaining & -remaining
            answer = any(
                coverable(remaining & ~mask, k - 1) for mask in masks if mask & first
            )
        memo[(remaining, k)] = answer
        return answer

    for k in range(2, max_k + 1):
        if coverable(full, k):
            return k
    return Exceeded(max_k)
