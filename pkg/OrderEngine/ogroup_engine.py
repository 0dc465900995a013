"""
Operations on represented ordered groups: comparisons, finite windows, the
subgroups K(G) ⊆ A(G) ⊆ I(G)(0), and window checks of the structure results
for semiordered and threshold groups.

Every statement about an infinite group is checked on a finite window.
Elements closer than the margin to a free boundary may have lost
comparabilities to truncation, so trace, cover and subgroup checks only trust
interior elements. The margin is the group's reach (largest coordinate of the
attained threshold) and is stated in every report.
"""

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx
import numpy as np

from config import get_settings
from error_handler import DimensionError, TheoremViolation, UnsupportedCarrier, WindowTooLarge
from group_specs import (
    ConeGroup,
    GroupOrderSpec,
    LexProductGroup,
    LexSumGroup,
    OdotGroup,
    Ordering,
    Point,
    Subgroup,
    WeightOrderSpec,
    Window,
    ZnGroup,
    format_point,
    lattice_subgroup,
    lex_sign_array,
    product_subgroup,
    trivial,
    whole,
)
from order_classify import Classification, antichain_cover_number, classify, traces
from poset_core import FinitePoset, chains_sum, embeds_pattern, induced, is_prime

logger = logging.getLogger(__name__)


# ============================================
# Comparisons
# ============================================


def compare_total(spec: WeightOrderSpec, x: Sequence[int], y: Sequence[int]) -> Ordering:
    return spec.compare(x, y)


def group_lt(spec: GroupOrderSpec, x: Sequence[int], y: Sequence[int]) -> bool:
    x, y = spec.normalize(x), spec.normalize(y)
    return x != y and spec.in_segment(spec.sub(y, x))


def group_le(spec: GroupOrderSpec, x: Sequence[int], y: Sequence[int]) -> bool:
    """x <= y iff x = y or y - x lies in the strict positive set."""
    x, y = spec.normalize(x), spec.normalize(y)
    return x == y or spec.in_segment(spec.sub(y, x))


def interior_margin(spec: GroupOrderSpec) -> int:
    return spec.reach()


# ============================================
# Cones
# ============================================


@dataclass
class ConeReport:
    window: str
    contains_zero: bool
    closed_under_addition: bool
    antisymmetric: bool
    normal: bool = True
    notes: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.contains_zero and self.closed_under_addition and self.antisymmetric and self.normal
        )


def validate_cone(
    member: Callable[[Point], bool],
    window: Window,
    moduli: Optional[Sequence[Optional[int]]] = None,
) -> ConeReport:
    """Positive-cone axioms of C restricted to window. Sums leaving the window are skipped."""
    moduli = tuple(moduli) if moduli is not None else (None,) * window.dim

    def norm(x) -> Point:
        return tuple(int(v) % k if k else int(v) for v, k in zip(x, moduli))

    zero = (0,) * window.dim
    points = list(dict.fromkeys(norm(p) for p in window.points()))
    inside = [p for p in points if member(p)]
    failures: List[str] = []

    contains_zero = bool(member(zero))
    if not contains_zero:
        failures.append("0 is not in C")

    closed = True
    for a in inside:
        for b in inside:
            total = norm([u + v for u, v in zip(a, b)])
            if window.contains(total) and not member(total):
                closed = False
                if len(failures) < 3:
                    failures.append(f"{format_point(a)} + {format_point(b)} = {format_point(total)} not in C")

    antisymmetric = True
    for a in inside:
        if a != zero and member(norm([-v for v in a])):
            antisymmetric = False
            if len(failures) < 6:
                failures.append(f"both {format_point(a)} and its negative are in C")

    report = ConeReport(
        window=str(window),
        contains_zero=contains_zero,
        closed_under_addition=closed,
        antisymmetric=antisymmetric,
        notes=["normality holds trivially: the carrier is abelian"],
        failures=failures,
    )
    if not report.ok:
        logger.info(f"Cone fails on window {window}: {failures[0]}")
    return report


# ============================================
# Windows
# ============================================


def window_points(spec: GroupOrderSpec, window: Window) -> List[Point]:
    if window.dim != spec.dim:
        raise DimensionError(f"window has {window.dim} coordinates, group has {spec.dim}")
    return list(dict.fromkeys(spec.normalize(p) for p in window.points()))


def window_poset(
    spec: GroupOrderSpec, window: Window, cap: Optional[int] = None
) -> Tuple[FinitePoset, Dict[Point, int]]:
    """The restriction of the group order to window, plus point -> element index."""
    cap = cap if cap is not None else get_settings().window_cap
    if window.size() > cap:
        raise WindowTooLarge(f"window {window} has {window.size()} points, cap is {cap}")

    points = window_points(spec, window)
    lt = spec.strict_matrix(points)
    P = FinitePoset(lt, tuple(format_point(p) for p in points))
    logger.debug(f"Window {window}: {P.n} elements, {int(lt.sum())} strict pairs")
    return P, {p: i for i, p in enumerate(points)}


def inc0(spec: GroupOrderSpec, window: Window) -> FrozenSet[Point]:
    """Elements of window incomparable to 0."""
    zero = spec.zero()
    return frozenset(
        p
        for p in window_points(spec, window)
        if p != zero and not spec.in_segment(p) and not spec.in_segment(spec.neg(p))
    )


def _interior(spec: GroupOrderSpec, window: Window, points: Sequence[Point], margin: int) -> List[int]:
    moduli = spec.moduli()
    return [i for i, p in enumerate(points) if window.is_interior(p, margin, moduli)]


def _isolated(P: FinitePoset, members: Sequence[int]) -> FrozenSet[int]:
    """Members comparable to no other member."""
    if not members:
        return frozenset()
    block = P.comparable[np.ix_(members, members)] & ~np.eye(len(members), dtype=bool)
    return frozenset(members[k] for k in np.flatnonzero(~block.any(axis=1)))


def _auxiliary_matrix(spec: GroupOrderSpec, points: Sequence[Point]) -> Optional[np.ndarray]:
    """aux[i, j] iff points[i] strictly precedes points[j] in the auxiliary total order."""
    if not spec.has_auxiliary_order():
        return None
    if isinstance(spec, ZnGroup):
        W = np.array(spec.weights.rows, dtype=np.int64)
        img = np.array(points, dtype=np.int64) @ W.T
        return lex_sign_array(img[None, :, :] - img[:, None, :]) > 0
    n = len(points)
    aux = np.zeros((n, n), dtype=bool)
    for i, x in enumerate(points):
        for j, y in enumerate(points):
            aux[i, j] = spec.auxiliary_compare(x, y) is Ordering.LESS
    return aux


# ============================================
# K(G), A(G), I(G)(0)
# ============================================


@dataclass
class SubgroupReport:
    K: Subgroup
    A: Subgroup
    I: Subgroup
    exact: bool
    window_cross_check: Dict[str, bool]
    margin: int
    notes: List[str] = field(default_factory=list)

    @property
    def consistent(self) -> bool:
        return all(self.window_cross_check.values())


def _saturation_level(spec: ZnGroup) -> int:
    """Largest j with F a union of H_j-cosets.

    F has a least element θ, so F + H_j = F forces θ - h ∈ F for every h in H_j.
    """
    weights = spec.weights
    theta = spec.attained_threshold()
    probes_base = (weights.least_positive(),)
    level = 0
    for j in range(1, weights.n + 1):
        probes = weights.kernel_basis(j) + probes_base
        if all(
            spec.in_segment(spec.sub(theta, v)) and spec.in_segment(spec.add(theta, v))
            for v in probes
        ):
            level = j
        else:
            break
    return level


def exact_subgroups(spec: GroupOrderSpec) -> Tuple[Subgroup, Subgroup, Subgroup, bool]:
    """(K, A, I, exact). Exact formulas for ℤⁿ weight orders; the product
    constructions give the known answers, flagged exact=False."""
    if isinstance(spec, ZnGroup):
        weights = spec.weights
        theta = spec.attained_threshold()
        if theta == weights.least_positive():
            total = lattice_subgroup(weights, 0)
            return total, total, total, True
        j_i = weights.level(theta)
        return (
            lattice_subgroup(weights, _saturation_level(spec)),
            lattice_subgroup(weights, j_i - 1),
            lattice_subgroup(weights, j_i),
            True,
        )

    if isinstance(spec, LexProductGroup):
        K, A, I, _ = exact_subgroups(spec.base)
        factor = whole(1, spec.factor)
        width = spec.base.dim
        return (
            product_subgroup([(1, factor), (width, K)]),
            product_subgroup([(1, factor), (width, A)]),
            product_subgroup([(1, factor), (width, I)]),
            False,
        )

    if isinstance(spec, LexSumGroup):
        K, A, I, _ = exact_subgroups(spec.inner)
        outer = (spec.outer.n, trivial(spec.outer.n))
        width = spec.inner.dim
        return (
            product_subgroup([(width, K), outer]),
            product_subgroup([(width, A), outer]),
            product_subgroup([(width, I), outer]),
            False,
        )

    if isinstance(spec, OdotGroup):
        weights = spec.base.weights
        j_i = weights.level(spec.alpha)
        a = spec.a_order.n
        b = spec.base.dim
        return (
            product_subgroup([(a, trivial(a)), (b, trivial(b))]),
            product_subgroup([(a, whole(a)), (b, lattice_subgroup(weights, j_i - 1))]),
            product_subgroup([(a, whole(a)), (b, lattice_subgroup(weights, j_i))]),
            False,
        )

    raise UnsupportedCarrier(f"no subgroup formulas for {spec.kind} carriers")


def subgroups_KAI(spec: GroupOrderSpec, window: Window, cap: Optional[int] = None) -> SubgroupReport:
    K, A, I, exact = exact_subgroups(spec)
    P, index = window_poset(spec, window, cap)
    points = list(index)
    zero = spec.zero()
    z = index[zero]
    margin = interior_margin(spec)
    interior = _interior(spec, window, points, margin)

    inc_members = [int(i) for i in np.flatnonzero(P.incomparable[z])]
    inc_set = {points[i] for i in inc_members} | {zero}
    isolated = _isolated(P, inc_members)

    k_ok = all((points[i] in K) == (i == z or i in isolated) for i in interior)

    bound = spec.multiple_bound()
    a_ok = True
    for p in points:
        multiples = [spec.normalize([m * v for v in p]) for m in range(1, bound + 1)]
        if not all(window.contains(q) for q in multiples):
            continue
        if (p in A) != all(q in inc_set for q in multiples):
            a_ok = False
            logger.warning(f"A(G) window check fails at {format_point(p)}")
            break

    graph = nx.Graph()
    graph.add_nodes_from(range(P.n))
    graph.add_edges_from((int(i), int(j)) for i, j in zip(*np.nonzero(np.triu(P.incomparable))))
    component = nx.node_connected_component(graph, z)
    i_ok = all(points[i] in I for i in component)

    nested = all(p in A for p in points if p in K) and all(p in I for p in points if p in A)

    notes = [f"interior margin {margin}: boundary elements excluded from the K check"]
    if not exact:
        notes.append("product carrier: known construction, window evidence only")

    checks = {"K": k_ok, "A": a_ok, "I": i_ok, "nested": nested}
    if not all(checks.values()):
        logger.warning(f"Subgroup cross-check failed for {spec.kind} on {window}: {checks}")
    return SubgroupReport(K, A, I, exact, checks, margin, notes)


def convex_subgroup_chain(spec: ZnGroup, window: Window) -> Dict[int, bool]:
    """For each convex subgroup H_j of the weight order: H_j ⊆ A(G) or I(G)(0) ⊆ H_j,
    checked on the points of window."""
    if not isinstance(spec, ZnGroup):
        raise UnsupportedCarrier(f"convex subgroups are only listed for zn carriers, not {spec.kind}")
    _, A, I, _ = exact_subgroups(spec)
    points = window_points(spec, window)
    result = {}
    for j in range(spec.weights.n + 1):
        H = lattice_subgroup(spec.weights, j)
        inside_A = all(p in A for p in points if p in H)
        contains_I = all(p in H for p in points if p in I)
        result[j] = inside_A or contains_I
    return result


# ============================================
# Threshold and trace checks
# ============================================


@dataclass
class ThresholdReport:
    window: str
    margin: int
    interior: int
    pred_antisymmetric: bool
    pred_total: bool
    matches_auxiliary: Optional[bool]
    k_trivial: bool

    @property
    def is_threshold(self) -> bool:
        return (
            self.pred_antisymmetric
            and self.pred_total
            and self.k_trivial
            and self.matches_auxiliary is not False
        )


def verify_threshold(spec: GroupOrderSpec, window: Window, cap: Optional[int] = None) -> ThresholdReport:
    P, index = window_poset(spec, window, cap)
    points = list(index)
    margin = interior_margin(spec)
    inner = _interior(spec, window, points, margin)
    pred, _ = traces(P)

    block = pred.le[np.ix_(inner, inner)]
    off_diagonal = ~np.eye(len(inner), dtype=bool)
    antisymmetric = not (block & block.T & off_diagonal).any()
    total = bool((block | block.T).all())

    aux = _auxiliary_matrix(spec, [points[i] for i in inner])
    matches = None
    if aux is not None:
        matches = bool(np.array_equal(block & off_diagonal, aux))

    z = index[spec.zero()]
    inc_members = [int(i) for i in np.flatnonzero(P.incomparable[z])]
    inner_set = set(inner)
    k_trivial = not any(i in inner_set for i in _isolated(P, inc_members))

    return ThresholdReport(
        window=str(window),
        margin=margin,
        interior=len(inner),
        pred_antisymmetric=antisymmetric,
        pred_total=total,
        matches_auxiliary=matches,
        k_trivial=k_trivial,
    )


@dataclass
class TraceReport:
    interior: int
    equal: bool
    mismatch: Optional[Tuple[Point, Point]] = None


def trace_equality_check(spec: GroupOrderSpec, window: Window, cap: Optional[int] = None) -> TraceReport:
    """pred and succ traces agree on interior pairs."""
    P, index = window_poset(spec, window, cap)
    points = list(index)
    inner = _interior(spec, window, points, interior_margin(spec))
    pred, succ = traces(P)
    a = pred.le[np.ix_(inner, inner)]
    b = succ.le[np.ix_(inner, inner)]
    diff = np.argwhere(a != b)
    if len(diff):
        i, j = diff[0]
        return TraceReport(len(inner), False, (points[inner[i]], points[inner[j]]))
    return TraceReport(len(inner), True)


@dataclass
class CoverReport:
    interior: int
    missing_upper: List[Point] = field(default_factory=list)
    missing_lower: List[Point] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.missing_upper and not self.missing_lower


def cover_check(spec: GroupOrderSpec, window: Window, cap: Optional[int] = None) -> CoverReport:
    """Each interior element has an upper and a lower cover inside the window."""
    P, index = window_poset(spec, window, cap)
    points = list(index)
    inner = _interior(spec, window, points, interior_margin(spec))
    covers = P.covers
    report = CoverReport(len(inner))
    for i in inner:
        if not covers[i].any():
            report.missing_upper.append(points[i])
        if not covers[:, i].any():
            report.missing_lower.append(points[i])
    return report


@dataclass
class WeakOrderReport:
    inc0_antichain: bool
    closed_under_subtraction: bool
    window_weak: bool

    @property
    def agree(self) -> bool:
        return self.inc0_antichain == self.closed_under_subtraction == self.window_weak


def weak_order_check(spec: GroupOrderSpec, window: Window, cap: Optional[int] = None) -> WeakOrderReport:
    """A group order is weak iff inc(0) is an antichain iff inc(0) ∪ {0} is a subgroup."""
    P, index = window_poset(spec, window, cap)
    points = list(index)
    z = index[spec.zero()]
    members = [int(i) for i in np.flatnonzero(P.incomparable[z])]
    antichain_flag = not P.lt[np.ix_(members, members)].any()

    closed = True
    group = [points[i] for i in members] + [spec.zero()]
    allowed = set(group)
    for x in group:
        for y in group:
            d = spec.sub(x, y)
            if window.contains(d) and d not in allowed:
                closed = False
                break
        if not closed:
            break

    return WeakOrderReport(antichain_flag, closed, classify(P).is_weak)


@dataclass
class Inc0Report:
    size: int
    bipartite: bool
    isolated: List[Point]
    prime: bool
    window_semiorder: bool
    window_threshold: bool

    @property
    def semiorder_matches(self) -> bool:
        return self.window_semiorder == self.bipartite

    @property
    def threshold_matches(self) -> bool:
        return self.window_threshold == (self.bipartite and not self.isolated)


def inc0_structure(spec: GroupOrderSpec, window: Window, cap: Optional[int] = None) -> Inc0Report:
    P, index = window_poset(spec, window, cap)
    points = list(index)
    z = index[spec.zero()]
    members = [int(i) for i in np.flatnonzero(P.incomparable[z])]
    sub = induced(P, members)
    inner = set(_interior(spec, window, points, interior_margin(spec)))
    isolated = sorted(points[i] for i in _isolated(P, members) if i in inner)
    return Inc0Report(
        size=len(members),
        bipartite=antichain_cover_number(sub) <= 2,
        isolated=isolated,
        prime=is_prime(sub),
        window_semiorder=classify(P).is_semiorder,
        window_threshold=verify_threshold(spec, window, cap).is_threshold,
    )


def classify_window(spec: GroupOrderSpec, window: Window, cap: Optional[int] = None) -> Classification:
    """classify() on a window; a group window that is an interval order but not
    a semiorder contradicts the group theory and raises."""
    P, _ = window_poset(spec, window, cap)
    result = classify(P)
    if not isinstance(spec, ConeGroup) and result.is_interval != result.is_semiorder:
        raise TheoremViolation(
            f"{spec.kind} window {window}: interval={result.is_interval} "
            f"semiorder={result.is_semiorder}"
        )
    return result


# ============================================
# Translation of 1⊕n into (q+1)⊕p
# ============================================


def _is_chain(spec: GroupOrderSpec, points: Sequence[Point]) -> bool:
    return all(group_lt(spec, a, b) for a, b in zip(points, points[1:]))


def _incomparable(spec: GroupOrderSpec, x: Point, y: Point) -> bool:
    return x != y and not group_le(spec, x, y) and not group_le(spec, y, x)


def _is_chain_sum(spec: GroupOrderSpec, low: Sequence[Point], high: Sequence[Point]) -> bool:
    return (
        _is_chain(spec, low)
        and _is_chain(spec, high)
        and all(_incomparable(spec, x, y) for x in low for y in high)
    )


def transfer_witness(
    spec: GroupOrderSpec, lone: Point, chain_points: Sequence[Point], p: int
) -> Tuple[List[Point], List[Point]]:
    """From a copy of 1⊕n (lone element, increasing chain) build a copy of
    (q+1)⊕p, q = n - p, returned as (q+1-chain, p-chain)."""
    n = len(chain_points)
    if not 1 <= p < n:
        raise ValueError(f"need 1 <= p < {n}, got {p}")
    ys = [spec.sub(y, lone) for y in chain_points]
    top = ys[p - 1]
    xs = [spec.sub(top, ys[i]) for i in range(n - 1, p - 1, -1)] + [spec.zero()]
    low = ys[:p]
    if not _is_chain_sum(spec, xs, low):
        raise TheoremViolation(
            f"translated copy of 1+{n} is not {n - p + 1}+{p}: "
            f"{[format_point(x) for x in xs]} / {[format_point(y) for y in low]}"
        )
    return xs, low


def transfer_witness_back(
    spec: GroupOrderSpec, x_chain: Sequence[Point], y_chain: Sequence[Point]
) -> Tuple[Point, List[Point]]:
    """From a copy of (q+1)⊕p build a copy of 1⊕n, returned as (0, n-chain)."""
    q = len(x_chain) - 1
    shift = x_chain[q]
    xs = [spec.sub(x, shift) for x in x_chain]
    ys = [spec.sub(y, shift) for y in y_chain]
    top = ys[-1]
    chain_points = ys + [spec.sub(top, xs[i]) for i in range(q - 1, -1, -1)]
    zero = spec.zero()
    if not (
        _is_chain(spec, chain_points) and all(_incomparable(spec, zero, c) for c in chain_points)
    ):
        raise TheoremViolation(
            f"translated copy of {q + 1}+{len(ys)} is not 1+{len(chain_points)}: "
            f"{[format_point(c) for c in chain_points]}"
        )
    return zero, chain_points


@dataclass
class TransferRow:
    p: int
    q: int
    found: bool
    constructed: bool

    @property
    def pattern(self) -> str:
        return f"{self.q + 1}+{self.p}"


@dataclass
class TransferReport:
    n: int
    window: str
    one_plus_n: bool
    rows: List[TransferRow]
    one_plus_n_constructed: bool = False
    grown_window: Optional[str] = None
    violation: bool = False
    notes: List[str] = field(default_factory=list)

    @property
    def co_occur(self) -> bool:
        return all(row.found == self.one_plus_n for row in self.rows)


def _transfer_scan(P: FinitePoset, n: int):
    ones = embeds_pattern(P, chains_sum(1, n))
    sums = {p: embeds_pattern(P, chains_sum(n - p + 1, p)) for p in range(1, n)}
    return ones, sums


def _translate_found(
    spec: GroupOrderSpec, points: Sequence[Point], n: int, ones, sums
) -> Tuple[Dict[int, bool], bool]:
    """Carry the found copies over by translation: (constructed per p, 1⊕n constructed)."""
    constructed = {p: False for p in sums}
    if ones.found:
        lone, *rest = (points[i] for i in ones.witness)
        for p in sums:
            transfer_witness(spec, lone, rest, p)
            constructed[p] = True
    one_constructed = ones.found
    for p, match in sums.items():
        if match.found and not one_constructed:
            q = n - p
            chain_points = [points[i] for i in match.witness]
            transfer_witness_back(spec, chain_points[: q + 1], chain_points[q + 1 :])
            one_constructed = True
    return constructed, one_constructed


def pattern_transfer_check(
    spec: GroupOrderSpec, window: Window, n: int, cap: Optional[int] = None
) -> TransferReport:
    """Does 1⊕n embed into the window exactly when every (q+1)⊕p, p+q=n, does?

    Found copies are also carried over by translation and the translated copy
    is checked with the group order itself, outside any window. A window that
    disagrees is grown once by margin·(n+1) before a VIOLATION is reported.
    """
    if not 2 <= n <= 5:
        raise ValueError(f"n must be between 2 and 5, got {n}")

    P, index = window_poset(spec, window, cap)
    points = list(index)
    ones, sums = _transfer_scan(P, n)
    constructed, one_constructed = _translate_found(spec, points, n, ones, sums)

    report = TransferReport(
        n=n,
        window=str(window),
        one_plus_n=ones.found,
        rows=[TransferRow(p, n - p, sums[p].found, constructed[p]) for p in sums],
        one_plus_n_constructed=one_constructed,
    )
    if report.co_occur:
        return report

    margin = interior_margin(spec) * (n + 1)
    grown = window.grow(margin, spec.moduli())
    limit = cap if cap is not None else get_settings().window_cap
    if grown.size() > limit:
        report.notes.append(f"not found in window; grown window {grown} exceeds the cap")
        return report

    logger.info(f"Growing window {window} to {grown} for the 1+{n} transfer check")
    P, index = window_poset(spec, grown, limit)
    ones, sums = _transfer_scan(P, n)
    constructed, one_constructed = _translate_found(spec, list(index), n, ones, sums)
    report.grown_window = str(grown)
    report.one_plus_n = ones.found
    report.one_plus_n_constructed = one_constructed
    for row in report.rows:
        row.found = sums[row.p].found
        row.constructed = constructed[row.p]
    if not report.co_occur:
        report.violation = True
        logger.error(f"VIOLATION: 1+{n} transfer fails on {grown} for {spec.kind}")
    return report


# ============================================
# Sampling and integer groups
# ============================================


@dataclass
class CompatibilityReport:
    trials: int
    comparable: int
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def compatibility_sample(spec: GroupOrderSpec, box: Window, trials: int, seed: int = 0) -> CompatibilityReport:
    """x <= y implies x+z <= y+z, on random triples from box."""
    rng = np.random.default_rng(seed)
    lows = np.array([lo for lo, _ in box.bounds])
    highs = np.array([hi for _, hi in box.bounds]) + 1
    report = CompatibilityReport(trials, 0)
    for _ in range(trials):
        x, y, z = (tuple(int(v) for v in rng.integers(lows, highs)) for _ in range(3))
        if not group_le(spec, x, y):
            continue
        report.comparable += 1
        if not group_le(spec, spec.add(x, z), spec.add(y, z)):
            if len(report.failures) < 3:
                report.failures.append(
                    f"{format_point(x)} <= {format_point(y)} but not after adding {format_point(z)}"
                )
    return report


@dataclass(frozen=True)
class IntegerConeShape:
    shape: str
    a: Optional[int]
    is_semiorder: bool
    is_threshold: bool


def classify_integer_cone(member: Callable[[int], bool], bound: int) -> IntegerConeShape:
    """Compatible orders on ℤ: semiorders are exactly the strict cones ∅, a+ℕ and -(a+ℕ)."""
    strict = [x for x in range(-bound, bound + 1) if x and member(x)]
    if not strict:
        return IntegerConeShape("empty", None, True, False)
    if all(x > 0 for x in strict):
        a = min(strict)
        if strict == list(range(a, bound + 1)):
            return IntegerConeShape("a+N", a, True, True)
    if all(x < 0 for x in strict):
        a = -max(strict)
        if strict == list(range(-bound, -a + 1)):
            return IntegerConeShape("-(a+N)", a, True, True)
    return IntegerConeShape("other", None, False, False)


def integer_threshold_offsets(P: FinitePoset, t: int) -> Optional[Dict[int, int]]:
    """Integer positions r with x < y iff r(y) - r(x) >= t, or None.

    An embedding into (ℤ, ≤_t) must list elements in the order of the total
    quasi-order pred ∩ succ (twins in index order), which turns the question
    into an integer difference system.
    """
    if t < 1:
        raise ValueError(f"threshold must be positive, got {t}")
    if P.n == 0:
        return {}
    if not classify(P).is_semiorder:
        return None

    pred, succ = traces(P)
    weak = pred.le & succ.le
    rank = {x: int((weak[:, x] & ~weak[x, :]).sum()) for x in range(P.n)}
    order = sorted(range(P.n), key=lambda x: (rank[x], x))

    graph = nx.DiGraph()
    graph.add_nodes_from(range(P.n))

    def at_least(x: int, y: int, c: int):
        # r(y) - r(x) >= c
        w = -c
        if graph.has_edge(y, x):
            w = min(w, graph[y][x]["weight"])
        graph.add_edge(y, x, weight=w)

    for i, x in enumerate(order):
        for y in order[i + 1 :]:
            if P.lt[x, y]:
                at_least(x, y, t)
            elif P.lt[y, x]:
                return None
            else:
                at_least(x, y, 1)
                at_least(y, x, 1 - t)

    source = "source"
    graph.add_edges_from((source, v, {"weight": 0}) for v in range(P.n))
    try:
        dist = nx.single_source_bellman_ford_path_length(graph, source, weight="weight")
    except nx.NetworkXUnbounded:
        return None
    low = min(dist[v] for v in range(P.n))
    return {v: int(dist[v] - low) for v in range(P.n)}


def embeds_in_integer_threshold(P: FinitePoset, t: int) -> bool:
    return integer_threshold_offsets(P, t) is not None
