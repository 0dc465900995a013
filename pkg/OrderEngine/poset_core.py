"""
Finite posets and quasi-orders as dense boolean matrices.

Everything here is immutable once built: matrices are copied on construction
and flagged read-only, and every operation returns a new value.
"""

import logging
from dataclasses import dataclass
from functools import cached_property, cmp_to_key
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from error_handler import ArityError, CycleError

logger = logging.getLogger(__name__)


def _compose(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Boolean matrix product."""
    return (a.astype(np.int32) @ b.astype(np.int32)) > 0


def _row_masks(matrix: np.ndarray) -> Tuple[int, ...]:
    """Each row as an int bitset (bit j set iff matrix[i, j])."""
    masks = []
    for row in matrix:
        mask = 0
        for j in np.flatnonzero(row):
            mask |= 1 << int(j)
        masks.append(mask)
    return tuple(masks)


def _square_bool(matrix, name: str) -> np.ndarray:
    arr = np.array(matrix, dtype=bool)
    if arr.size == 0:
        arr = np.zeros((0, 0), dtype=bool)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {arr.shape}")
    return arr


@dataclass(frozen=True, eq=False)
class FinitePoset:
    """Strict order on elements 0..n-1; lt[i, j] means i < j."""

    lt: np.ndarray
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        lt = _square_bool(self.lt, "lt")
        if lt.diagonal().any():
            bad = int(np.flatnonzero(lt.diagonal())[0])
            raise CycleError(f"element {bad} is strictly below itself")
        if len(lt) and (_compose(lt, lt) & ~lt).any():
            raise ValueError("strict relation is not transitive")
        lt.setflags(write=False)
        object.__setattr__(self, "lt", lt)
        if self.labels is not None:
            labels = tuple(str(label) for label in self.labels)
            if len(labels) != len(lt):
                raise ValueError(f"{len(labels)} labels for {len(lt)} elements")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return self.lt.shape[0]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    @cached_property
    def le(self) -> np.ndarray:
        le = self.lt | np.eye(self.n, dtype=bool)
        le.setflags(write=False)
        return le

    @cached_property
    def comparable(self) -> np.ndarray:
        comp = self.lt | self.lt.T
        comp.setflags(write=False)
        return comp

    @cached_property
    def incomparable(self) -> np.ndarray:
        inc = ~(self.comparable | np.eye(self.n, dtype=bool))
        inc.setflags(write=False)
        return inc

    @cached_property
    def down_masks(self) -> Tuple[int, ...]:
        return _row_masks(self.lt.T)

    @cached_property
    def up_masks(self) -> Tuple[int, ...]:
        return _row_masks(self.lt)

    @cached_property
    def inc_masks(self) -> Tuple[int, ...]:
        return _row_masks(self.incomparable)

    @cached_property
    def covers(self) -> np.ndarray:
        cov = self.lt & ~_compose(self.lt, self.lt)
        cov.setflags(write=False)
        return cov

    def down(self, i: int) -> FrozenSet[int]:
        """D(i): elements strictly below i."""
        return frozenset(int(j) for j in np.flatnonzero(self.lt[:, i]))

    def up(self, i: int) -> FrozenSet[int]:
        """U(i): elements strictly above i."""
        return frozenset(int(j) for j in np.flatnonzero(self.lt[i]))

    def pairs(self) -> List[Tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.lt))]

    def cover_edges(self) -> List[Tuple[int, int]]:
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.covers))]

    def same_order(self, other: "FinitePoset") -> bool:
        return self.lt.shape == other.lt.shape and bool(np.array_equal(self.lt, other.lt))

    def digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.pairs())
        return graph

    def signature(self) -> Tuple[Tuple[int, int], ...]:
        """Isomorphism invariant: sorted (|D(x)|, |U(x)|) pairs."""
        downs = self.lt.sum(axis=0)
        ups = self.lt.sum(axis=1)
        return tuple(sorted(zip(downs.tolist(), ups.tolist())))

    def __repr__(self) -> str:
        return f"FinitePoset(n={self.n}, pairs={self.pairs()})"


@dataclass(frozen=True, eq=False)
class QuasiOrder:
    """Reflexive, transitive relation; le[i, j] means i <= j."""

    le: np.ndarray

    def __post_init__(self):
        le = _square_bool(self.le, "le")
        if not le.diagonal().all():
            raise ValueError("quasi-order must be reflexive")
        if len(le) and (_compose(le, le) & ~le).any():
            raise ValueError("quasi-order must be transitive")
        le.setflags(write=False)
        object.__setattr__(self, "le", le)

    @property
    def n(self) -> int:
        return self.le.shape[0]

    @cached_property
    def strict(self) -> np.ndarray:
        lt = self.le & ~self.le.T
        lt.setflags(write=False)
        return lt

    @cached_property
    def equivalent(self) -> np.ndarray:
        eq = self.le & self.le.T
        eq.setflags(write=False)
        return eq

    def is_total(self) -> bool:
        return bool((self.le | self.le.T).all())

    def is_antisymmetric(self) -> bool:
        return bool((self.equivalent == np.eye(self.n, dtype=bool)).all())

    def intersect(self, other: "QuasiOrder") -> "QuasiOrder":
        return QuasiOrder(self.le & other.le)

    def equals(self, other: "QuasiOrder") -> bool:
        return bool(np.array_equal(self.le, other.le))


@dataclass(frozen=True)
class PatternMatch:
    """Result of an embedding search; witness[i] is the host image of pattern element i."""

    found: bool
    witness: Optional[Tuple[int, ...]] = None


@dataclass(frozen=True)
class SubsetProperties:
    autonomous: bool
    convex: bool
    antichain: bool
    chain: bool


# ============================================
# Constructors
# ============================================


def build_poset(
    n: int, edges: Iterable[Tuple[int, int]], labels: Optional[Sequence[str]] = None
) -> FinitePoset:
    """Transitive closure of the given edges on elements 0..n-1."""
    if n < 0:
        raise ValueError(f"element count must be non-negative, got {n}")

    graph = nx.DiGraph()
    graph.add_nodes_from(range(n))
    for i, j in edges:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError(f"edge ({i}, {j}) out of range for {n} elements")
        graph.add_edge(int(i), int(j))

    closure = nx.transitive_closure(graph, reflexive=False)
    lt = np.zeros((n, n), dtype=bool)
    for i, j in closure.edges():
        lt[i, j] = True

    if lt.diagonal().any():
        on_cycle = [int(i) for i in np.flatnonzero(lt.diagonal())]
        raise CycleError(f"edges close a cycle through {on_cycle}")

    return FinitePoset(lt, tuple(labels) if labels is not None else None)


def chain(n: int) -> FinitePoset:
    return FinitePoset(np.triu(np.ones((n, n), dtype=bool), k=1))


def antichain(n: int) -> FinitePoset:
    return FinitePoset(np.zeros((n, n), dtype=bool))


def lex_sum(index: FinitePoset, components: Sequence[FinitePoset]) -> FinitePoset:
    """Substitute components[i] for element i of the index poset."""
    if len(components) != index.n:
        raise ArityError(
            f"index has {index.n} elements but {len(components)} components given"
        )

    offsets = np.cumsum([0] + [c.n for c in components])
    total = int(offsets[-1])
    lt = np.zeros((total, total), dtype=bool)

    for i, component in enumerate(components):
        block = slice(offsets[i], offsets[i + 1])
        lt[block, block] = component.lt
    for i, j in index.pairs():
        lt[offsets[i] : offsets[i + 1], offsets[j] : offsets[j + 1]] = True

    return FinitePoset(lt)


def direct_sum(*components: FinitePoset) -> FinitePoset:
    return lex_sum(antichain(len(components)), components)


def linear_sum(*components: FinitePoset) -> FinitePoset:
    return lex_sum(chain(len(components)), components)


def chains_sum(p: int, q: int) -> FinitePoset:
    """p⊕q: direct sum of a p-chain and a q-chain (p-chain gets the low indices)."""
    return direct_sum(chain(p), chain(q))


def crown(k: int) -> FinitePoset:
    """Standard example S_k: a_i < b_j iff i != j (a_i = i, b_j = k + j)."""
    lt = np.zeros((2 * k, 2 * k), dtype=bool)
    for i in range(k):
        for j in range(k):
            if i != j:
                lt[i, k + j] = True
    labels = [f"a{i}" for i in range(k)] + [f"b{j}" for j in range(k)]
    return FinitePoset(lt, tuple(labels))


def induced(P: FinitePoset, subset: Iterable[int]) -> FinitePoset:
    """Restriction of P to subset, elements renumbered in increasing order."""
    idx = sorted(set(int(i) for i in subset))
    for i in idx:
        if not 0 <= i < P.n:
            raise IndexError(f"element {i} out of range for {P.n} elements")
    labels = tuple(P.label(i) for i in idx) if P.labels is not None else None
    return FinitePoset(P.lt[np.ix_(idx, idx)], labels)


# ============================================
# Embeddings
# ============================================


def _search_order(pattern: FinitePoset) -> List[int]:
    """Least comparable element first, then greedily the element with the most
    incomparabilities to those already placed (those sets are small in hosts of
    interest, so branching stays narrow)."""
    k = pattern.n
    degree = pattern.comparable.sum(axis=1)
    order = [min(range(k), key=lambda i: (degree[i], i))]
    rest = set(range(k)) - set(order)
    while rest:

        def score(i: int) -> Tuple[int, int, int]:
            inc = sum(1 for j in order if pattern.incomparable[i, j])
            return (-inc, -int(degree[i]), i)

        nxt = min(rest, key=score)
        order.append(nxt)
        rest.remove(nxt)
    return order


def embeds_pattern(host: FinitePoset, pattern: FinitePoset) -> PatternMatch:
    """Backtracking search for an order embedding of pattern into host."""
    k = pattern.n
    if k == 0:
        return PatternMatch(True, ())
    if k > host.n:
        return PatternMatch(False)

    order = _search_order(pattern)

    host_down = host.lt.sum(axis=0)
    host_up = host.lt.sum(axis=1)
    pat_down = pattern.lt.sum(axis=0)
    pat_up = pattern.lt.sum(axis=1)
    allowed = []
    for p in range(k):
        mask = 0
        for h in np.flatnonzero((host_down >= pat_down[p]) & (host_up >= pat_up[p])):
            mask |= 1 << int(h)
        allowed.append(mask)

    assignment: List[Optional[int]] = [None] * k

    def extend(pos: int) -> bool:
        if pos == k:
            return True
        p = order[pos]
        mask = allowed[p]
        for q in order[:pos]:
            h = assignment[q]
            if pattern.lt[p, q]:
                mask &= host.down_masks[h]
            elif pattern.lt[q, p]:
                mask &= host.up_masks[h]
            else:
                mask &= host.inc_masks[h]
            if not mask:
                return False
        while mask:
            low = mask & -mask
            assignment[p] = low.bit_length() - 1
            if extend(pos + 1):
                return True
            mask ^= low
        assignment[p] = None
        return False

    if extend(0):
        return PatternMatch(True, tuple(int(h) for h in assignment))
    return PatternMatch(False)


def is_embedding(host: FinitePoset, pattern: FinitePoset, witness: Sequence[int]) -> bool:
    """Check that witness is injective and preserves and reflects the order."""
    if len(witness) != pattern.n or len(set(witness)) != pattern.n:
        return False
    idx = list(witness)
    return bool(np.array_equal(host.lt[np.ix_(idx, idx)], pattern.lt))


def is_isomorphic(P: FinitePoset, Q: FinitePoset) -> bool:
    if P.n != Q.n or int(P.lt.sum()) != int(Q.lt.sum()):
        return False
    if P.signature() != Q.signature():
        return False
    return nx.is_isomorphic(P.digraph(), Q.digraph())


# ============================================
# Decompositions and subsets
# ============================================


def incomparability_components(
    P: FinitePoset,
) -> Tuple[List[FrozenSet[int]], FinitePoset]:
    """Connected components of the incomparability graph, listed bottom to top,
    together with the chain that orders them."""
    graph = nx.Graph()
    graph.add_nodes_from(range(P.n))
    graph.add_edges_from((int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(P.incomparable))))

    parts = [frozenset(component) for component in nx.connected_components(graph)]

    def below(a: FrozenSet[int], b: FrozenSet[int]) -> int:
        if a == b:
            return 0
        return -1 if P.lt[min(a), min(b)] else 1

    parts.sort(key=cmp_to_key(below))
    return parts, chain(len(parts))


def subset_properties(P: FinitePoset, Y: Iterable[int]) -> SubsetProperties:
    members = sorted(set(int(y) for y in Y))
    for y in members:
        if not 0 <= y < P.n:
            raise IndexError(f"element {y} out of range for {P.n} elements")

    inside = np.zeros(P.n, dtype=bool)
    inside[members] = True

    autonomous = True
    for x in np.flatnonzero(~inside) if members else ():
        below = P.lt[x, members]
        above = P.lt[members, x]
        if below.any() != below.all() or above.any() != above.all():
            autonomous = False
            break

    between = P.lt[members][:, ~inside]
    over = P.lt[:, members][~inside, :]
    # z outside Y with y < z < y' for some y, y' in Y
    convex = not _compose(between, over).any() if len(members) else True

    sub = P.lt[np.ix_(members, members)]
    antichain_flag = not sub.any()
    comp = sub | sub.T | np.eye(len(members), dtype=bool)
    chain_flag = bool(comp.all())

    return SubsetProperties(autonomous, bool(convex), bool(antichain_flag), chain_flag)


def quotient_by_equiv(Q: QuasiOrder) -> Tuple[FinitePoset, Tuple[int, ...]]:
    """Collapse mutual-le classes; class indices follow first occurrence."""
    projection = [-1] * Q.n
    reps: List[int] = []
    for i in range(Q.n):
        if projection[i] >= 0:
            continue
        cls = len(reps)
        reps.append(i)
        for j in np.flatnonzero(Q.equivalent[i]):
            projection[int(j)] = cls

    lt = Q.strict[np.ix_(reps, reps)]
    return FinitePoset(lt), tuple(projection)


def autonomous_closure(P: FinitePoset, seed: Iterable[int]) -> FrozenSet[int]:
    """Least autonomous subset containing seed."""
    inside = np.zeros(P.n, dtype=bool)
    inside[sorted(set(int(s) for s in seed))] = True
    if inside.sum() <= 1:
        return frozenset(int(i) for i in np.flatnonzero(inside))

    while True:
        cols = P.lt[:, inside]
        rows = P.lt[inside, :].T
        uniform = (cols.all(axis=1) | ~cols.any(axis=1)) & (
            rows.all(axis=1) | ~rows.any(axis=1)
        )
        splitters = ~inside & ~uniform
        if not splitters.any():
            return frozenset(int(i) for i in np.flatnonzero(inside))
        inside |= splitters


def is_prime(P: FinitePoset) -> bool:
    """True iff the only autonomous subsets are empty, singletons and P."""
    if P.n <= 2:
        return True
    for a in range(P.n):
        for b in range(a + 1, P.n):
            if len(autonomous_closure(P, (a, b))) != P.n:
                return False
    return True


def largest_autonomous_antichain(P: FinitePoset, x: int) -> FrozenSet[int]:
    """Members are exactly the twins of x: same strict down-set and up-set."""
    same_down = (P.lt == P.lt[:, [x]]).all(axis=0)
    same_up = (P.lt == P.lt[[x], :]).all(axis=1)
    return frozenset(int(i) for i in np.flatnonzero(same_down & same_up))


def hasse_dot(P: FinitePoset, name: str = "P") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i in range(P.n):
        lines.append(f'  n{i} [label="{P.label(i)}"];')
    for i, j in P.cover_edges():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def named_patterns() -> Dict[str, FinitePoset]:
    return {
        "2+2": chains_sum(2, 2),
        "3+1": chains_sum(3, 1),
        "1+2": chains_sum(1, 2),
    }
