"""
Acceptance evaluator: runs every invariant suite against the engine and
writes a results.json report.

    python Verifier/corpus_verifier.py --suite quick
"""

import argparse
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional

sys.path.append(str(Path(__file__).resolve().parent.parent / "OrderEngine"))

import numpy as np
from pydantic import ValidationError

from battery import NotRefuted, Refuted, preceq_battery
from clifford_group import (
    FinalSegment,
    NoneFound,
    Witness,
    add,
    compare,
    conjugate,
    format_element,
    identity,
    neg,
    parse_element,
    parse_word,
    probe_final_segment_normality,
    random_element,
    random_word,
    reduce,
    verify_swap_rule,
)
from config import Settings, get_settings
from corpus import corpus
from corpus_cache import CorpusCache
from error_handler import CheckStats, CriteriaDisagreement, NotSemiorder, OracleUndecided, OrderError
from group_specs import FinalSegmentSpec, Ordering, WeightOrderSpec, Window, ZnGroup
from ogroup_engine import (
    classify_window,
    compatibility_sample,
    convex_subgroup_chain,
    cover_check,
    inc0,
    pattern_transfer_check,
    subgroups_KAI,
    trace_equality_check,
    verify_threshold,
    weak_order_check,
)
from order_classify import classify, comparability_union_critical
from order_represent import (
    Exceeded,
    brute_force_dimension,
    interval_representation,
    realizer_dim3_threshold,
    unit_representation,
)
from poset_core import (
    FinitePoset,
    antichain,
    chain,
    chains_sum,
    incomparability_components,
    induced,
    is_isomorphic,
    lex_sum,
    subset_properties,
)

from aggregation import ResultAggregator
from ground_truth import (
    BATTERY_NOT_REFUTED,
    BATTERY_REFUTED,
    CLIFFORD_PROBES,
    CLIFFORD_REDUCTIONS,
    INTERVAL_ORDER_COUNTS,
    POSET_COUNTS,
    SEMIORDER_COUNTS,
    WEAK_ORDER_COUNTS,
    lex_plane_inc0,
    mismatches,
)
from instances import (
    GROUP_INSTANCES,
    POSET_INSTANCES,
    SUITES,
    lex_plane_group,
    integer_group,
    lexprod_group,
    lexsum_group,
    odot_group,
)

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    """Result of one invariant suite"""

    name: str
    passed: bool
    checks: int
    failures: int
    time_taken: float
    details: Dict = field(default_factory=dict)
    error: Optional[str] = None


# ============================================
# Poset suites
# ============================================


def check_corpus_equivalences(posets: List[FinitePoset], stats: CheckStats) -> Dict:
    """Pattern and trace recognition agree on every poset; counts match the
    known enumerations."""
    counts: Dict[int, Dict[str, int]] = {}
    for P in posets:
        row = counts.setdefault(P.n, {"posets": 0, "interval": 0, "semiorder": 0, "weak": 0})
        row["posets"] += 1
        stats.record_check()
        try:
            result = classify(P)
        except CriteriaDisagreement as e:
            stats.record_failure("criteria", str(e))
            continue
        row["interval"] += result.is_interval
        row["semiorder"] += result.is_semiorder
        row["weak"] += result.is_weak

        stats.record_check()
        if not comparability_union_critical(P):
            stats.record_failure("pred∩succ = <= ∪ crit", repr(P))

    for n, row in counts.items():
        for key, table in (
            ("posets", POSET_COUNTS),
            ("interval", INTERVAL_ORDER_COUNTS),
            ("semiorder", SEMIORDER_COUNTS),
            ("weak", WEAK_ORDER_COUNTS),
        ):
            stats.record_check()
            if row[key] != table[n]:
                stats.record_failure("count", f"n={n} {key}: {row[key]} != {table[n]}")
    return {"by_size": {str(n): row for n, row in sorted(counts.items())}}


def check_unit_representations(posets: List[FinitePoset], stats: CheckStats) -> Dict:
    """Unit representations exist exactly for semiorders and round-trip."""
    represented = 0
    for P in posets:
        result = classify(P)
        stats.record_check()
        try:
            rep = unit_representation(P)
        except NotSemiorder:
            if result.is_semiorder:
                stats.record_failure("semiorder rejected", repr(P))
        except OrderError as e:
            stats.record_failure("unit representation", f"{type(e).__name__}: {e}")
        else:
            if not result.is_semiorder:
                stats.record_failure("non-semiorder accepted", repr(P))
            elif not rep.rebuild().same_order(P):
                stats.record_failure("unit round trip", repr(P))
            else:
                represented += 1

        if result.is_interval:
            stats.record_check()
            if not interval_representation(P).rebuild().same_order(P):
                stats.record_failure("interval round trip", repr(P))
    return {"unit_representations": represented}


def check_dimension_bound(posets: List[FinitePoset], stats: CheckStats) -> Dict:
    """Semiorders have dimension at most 3, and 3 is attained."""
    by_dimension: Dict[str, int] = {}
    for P in posets:
        if not classify(P).is_semiorder:
            continue
        stats.record_check()
        value = brute_force_dimension(P, 3)
        if isinstance(value, Exceeded):
            stats.record_failure("dimension > 3", repr(P))
            continue
        by_dimension[str(value)] = by_dimension.get(str(value), 0) + 1

    named = {}
    for instance in POSET_INSTANCES:
        if instance["category"] != "dimension":
            continue
        P = instance["build"]()
        value = brute_force_dimension(P, 4)
        named[instance["name"]] = value if isinstance(value, int) else f">{value.max_k}"
        stats.record_check()
        for problem in mismatches(instance["name"], {"dimension": value}):
            stats.record_failure("named dimension", problem)

    stats.record_check()
    attained = by_dimension.get("3", 0) > 0 or named.get("threshold-3-on-7") == 3
    if not attained:
        stats.record_failure("dimension 3 attained", "no semiorder of dimension 3 found")
    return {"semiorders_by_dimension": by_dimension, "named": named}


def check_reconstruction(posets: List[FinitePoset], stats: CheckStats) -> Dict:
    """Every poset is the lex sum of its incomparability components over a chain."""
    parts_by_size: Dict[str, int] = {}
    for P in posets:
        parts, order = incomparability_components(P)
        stats.record_check()
        if not is_isomorphic(lex_sum(order, [induced(P, part) for part in parts]), P):
            stats.record_failure("reconstruction", repr(P))
        key = str(len(parts))
        parts_by_size[key] = parts_by_size.get(key, 0) + 1

    # convex and autonomous coincide on chains
    for n in range(1, 7):
        C = chain(n)
        for mask in range(1 << n):
            subset = [i for i in range(n) if mask >> i & 1]
            props = subset_properties(C, subset)
            stats.record_check()
            if props.convex != props.autonomous:
                stats.record_failure("chain convex = autonomous", f"n={n} {subset}")
    return {"posets_by_part_count": dict(sorted(parts_by_size.items()))}


def check_ground_truth(stats: CheckStats) -> Dict:
    observed = {}
    for instance in POSET_INSTANCES:
        P = instance["build"]()
        result = classify(P)
        row = {
            "interval": result.is_interval,
            "semiorder": result.is_semiorder,
            "weak": result.is_weak,
            "threshold": result.is_threshold,
        }
        observed[instance["name"]] = row
        stats.record_check()
        for problem in mismatches(instance["name"], row):
            stats.record_failure("classification", problem)
    return {"observed": observed}


# ============================================
# Group suites
# ============================================


def check_realizer(stats: CheckStats) -> Dict:
    """Three linear orders realize (ℤ, ≤_α) on -4α..4α."""
    sizes = {}
    for alpha in (1, 2, 3):
        elements = list(range(-4 * alpha, 4 * alpha + 1))
        realizer = realizer_dim3_threshold(elements, lambda x: x, alpha)
        relation = {(x, y) for x in elements for y in elements if y - x >= alpha}
        stats.record_check()
        if not realizer.extends(relation):
            stats.record_failure("realizer extends", f"alpha={alpha}")
        stats.record_check()
        if realizer.intersection() != relation:
            stats.record_failure("realizer intersection", f"alpha={alpha}")
        sizes[str(alpha)] = len(elements)
    return {"window_sizes": sizes}


def check_pattern_transfer(stats: CheckStats, params: Dict, cap: int) -> Dict:
    """1⊕n embeds iff every (q+1)⊕p with p+q = n does."""
    cases = [
        (f"z-theta-{t}", integer_group(t), Window.cube(1, max(params["transfer_radius"], 2 * t)))
        for t in range(2, 7)
    ]
    cases.append(("lex-plane", lex_plane_group(), Window.cube(2, params["plane_radius"])))

    rows = {}
    for name, spec, window in cases:
        found = []
        for n in range(2, 6):
            stats.record_check()
            try:
                report = pattern_transfer_check(spec, window, n, cap)
            except OrderError as e:
                stats.record_failure("transfer", f"{name} n={n}: {type(e).__name__}: {e}")
                continue
            if report.violation or not report.co_occur:
                stats.record_failure("transfer", f"{name} n={n} on {report.grown_window or report.window}")
            found.append(report.one_plus_n)
        rows[name] = found
    return {"one_plus_n_found": rows}


def _random_zn(rng: np.random.Generator) -> ZnGroup:
    while True:
        rows = tuple(tuple(int(v) for v in row) for row in rng.integers(-2, 3, size=(2, 2)))
        try:
            weights = WeightOrderSpec(rows=rows)
        except ValidationError:
            continue
        theta = tuple(int(v) for v in rng.integers(-2, 3, size=2))
        if weights.sign(theta) <= 0:
            continue
        closed = bool(rng.random() < 0.5)
        return ZnGroup(weights=weights, threshold=FinalSegmentSpec(theta=theta, closed=closed))


def check_random_weight_orders(stats: CheckStats, params: Dict, seed: int, cap: int) -> Dict:
    """Group windows that are interval orders are semiorders, and pred is the weight order."""
    rng = np.random.default_rng(seed)
    window = Window.cube(2, params["random_radius"])
    semiorders = 0
    for _ in range(params["random_specs"]):
        spec = _random_zn(rng)
        label = f"rows={spec.weights.rows} theta={spec.threshold.theta}"
        stats.record_check()
        try:
            result = classify_window(spec, window, cap)
        except OrderError as e:
            stats.record_failure("interval = semiorder", f"{label}: {e}")
            continue
        semiorders += result.is_semiorder

        report = verify_threshold(spec, window, cap)
        stats.record_check()
        if report.matches_auxiliary is not True:
            stats.record_failure("pred = weight order", label)
    return {"specs": params["random_specs"], "window": str(window), "semiorders": semiorders}


def check_lex_plane(stats: CheckStats, cap: int) -> Dict:
    spec = lex_plane_group()
    window = Window.cube(2, 5)

    stats.record_check()
    computed = set(inc0(spec, window))
    expected = lex_plane_inc0(window)
    if computed != expected:
        stats.record_failure(
            "lex-plane inc(0)", f"{len(computed ^ expected)} points differ from the expected set"
        )

    report = subgroups_KAI(spec, window, cap)
    observed = {"K": str(report.K), "A": str(report.A), "I": str(report.I)}
    stats.record_check()
    for problem in mismatches("lex-plane", observed):
        stats.record_failure("lex-plane subgroups", problem)
    stats.record_check()
    if not report.consistent:
        stats.record_failure("lex-plane cross-check", str(report.window_cross_check))

    stats.record_check()
    threshold = verify_threshold(spec, window, cap)
    if not threshold.is_threshold:
        stats.record_failure("lex-plane threshold", str(threshold))
    return {"inc0_size": len(computed), **observed}


def check_weak_order(stats: CheckStats, cap: int) -> Dict:
    """inc(0) is an antichain iff inc(0) ∪ {0} is a subgroup iff the order is weak."""
    cases = [
        ("lexprod-z2-natural", lexprod_group(2, 1), True),
        ("z-theta-2", integer_group(2), False),
    ]
    observed = {}
    for name, spec, expected in cases:
        report = weak_order_check(spec, Window.for_group(spec, 8), cap)
        observed[name] = asdict(report)
        stats.record_check()
        if not report.agree:
            stats.record_failure("weak order agreement", f"{name}: {report}")
        stats.record_check()
        if report.inc0_antichain != expected or report.closed_under_subtraction != expected:
            stats.record_failure("weak order expected", f"{name}: {report}")
    return observed


def check_product_examples(stats: CheckStats, cap: int) -> Dict:
    observed = {}
    for instance in GROUP_INSTANCES:
        name = instance["name"]
        spec = instance["build"]()
        window = Window.for_group(spec, instance["radius"])

        result = classify_window(spec, window, cap)
        kai = subgroups_KAI(spec, window, cap)
        threshold = verify_threshold(spec, window, cap)
        row = {
            "K": str(kai.K),
            "A": str(kai.A),
            "I": str(kai.I),
            "semiorder": result.is_semiorder,
            "threshold": threshold.is_threshold,
        }
        observed[name] = row
        stats.record_check()
        for problem in mismatches(name, row):
            stats.record_failure("group ground truth", problem)
        stats.record_check()
        if not kai.consistent:
            stats.record_failure("subgroup cross-check", f"{name}: {kai.window_cross_check}")

    # K is not trivial for a product with a factor ordered by equality.
    spec = lexprod_group(2, 2)
    stats.record_check()
    if (1, 0) not in subgroups_KAI(spec, Window.for_group(spec, 4), cap).K:
        stats.record_failure("lexprod K", "(1,0) missing from K")

    # pred on the ⊙ product is the lexicographic order, ℤ coordinate first.
    spec = odot_group()
    stats.record_check()
    if verify_threshold(spec, Window.for_group(spec, 4), cap).matches_auxiliary is not True:
        stats.record_failure("odot pred", "pred differs from the lexicographic order")

    spec = lexsum_group()
    stats.record_check()
    if not verify_threshold(spec, Window.for_group(spec, 4), cap).is_threshold:
        stats.record_failure("lexsum threshold", "window is not a threshold order")
    return observed


def check_group_windows(stats: CheckStats, compat_trials: int, seed: int, cap: int) -> Dict:
    """Compatibility on sampled triples, pred = succ and covers, for every named group."""
    observed = {}
    for instance in GROUP_INSTANCES:
        name = instance["name"]
        spec = instance["build"]()
        window = Window.for_group(spec, instance["radius"])

        compat = compatibility_sample(spec, window, compat_trials, seed)
        stats.record_check()
        if not compat.ok:
            stats.record_failure("compatibility", f"{name}: {compat.failures[0]}")

        trace = trace_equality_check(spec, window, cap)
        stats.record_check()
        if not trace.equal:
            stats.record_failure("pred = succ", f"{name}: {trace.mismatch}")

        covers = cover_check(spec, window, cap)
        stats.record_check()
        if not covers.ok:
            missing = covers.missing_upper + covers.missing_lower
            stats.record_failure("covers", f"{name}: {len(missing)} interior points without a cover")

        observed[name] = {
            "comparable_triples": compat.comparable,
            "trials": compat.trials,
            "interior": trace.interior,
        }
    return observed


def check_convex_subgroups(stats: CheckStats, params: Dict, seed: int) -> Dict:
    """Each convex subgroup H_j of a weight order lies in A(G) or contains I(G)(0)."""
    rng = np.random.default_rng(seed)
    cases = [
        (instance["name"], instance["build"](), instance["radius"])
        for instance in GROUP_INSTANCES
        if instance["category"] == "zn"
    ]
    for i in range(params["random_specs"]):
        cases.append((f"random-{i}", _random_zn(rng), params["random_radius"]))

    levels = {}
    for name, spec, radius in cases:
        result = convex_subgroup_chain(spec, Window.cube(spec.dim, radius))
        levels[name] = len(result)
        for j, ok in result.items():
            stats.record_check()
            if not ok:
                stats.record_failure("convex subgroup chain", f"{name} H_{j}")
    return {"levels": levels}


def check_battery(stats: CheckStats) -> Dict:
    posets = {
        "chain-2": chain(2),
        "antichain-2": antichain(2),
        "antichain-3": antichain(3),
        "2+2": chains_sum(2, 2),
        "3+1": chains_sum(3, 1),
        "1+3": chains_sum(1, 3),
    }
    observed = {}
    for (p, q), expected in [(pair, Refuted) for pair in BATTERY_REFUTED] + [
        (pair, NotRefuted) for pair in BATTERY_NOT_REFUTED
    ]:
        result = preceq_battery(posets[p], posets[q])
        observed[f"{p} <= {q}"] = result.group if isinstance(result, Refuted) else "not refuted"
        stats.record_check()
        if not isinstance(result, expected):
            stats.record_failure("battery", f"{p} ⪯ {q}: expected {expected.__name__}")
    return observed


# ============================================
# Clifford suite
# ============================================


def _random_dyadic(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-32, 33)), 8)


def check_clifford(stats: CheckStats, trials: int, seed: int) -> Dict:
    rng = np.random.default_rng(seed)

    for word, expected in CLIFFORD_REDUCTIONS.items():
        stats.record_check()
        got = format_element(reduce(parse_word(word)))
        if got != expected:
            stats.record_failure("known reduction", f"{word} -> {got}, expected {expected}")

    for _ in range(trials):
        word = random_word(rng)
        stats.record_check()
        if reduce(word, "leftmost") != reduce(word, "rightmost"):
            stats.record_failure("confluence", " ".join(f"g({x.alpha})^{x.exponent}" for x in word.letters))

    for _ in range(trials):
        a, b, c = (random_element(rng) for _ in range(3))
        stats.record_check()
        if add(add(a, b), c) != add(a, add(b, c)):
            stats.record_failure("associativity", f"{a} | {b} | {c}")
        if not add(a, neg(a)).is_identity or add(a, identity()) != a:
            stats.record_failure("inverse/identity", str(a))

    swaps = max(1, trials // 10)
    for _ in range(swaps):
        alpha, beta = _random_dyadic(rng), _random_dyadic(rng)
        if alpha == beta:
            continue
        alpha, beta = max(alpha, beta), min(alpha, beta)
        stats.record_check()
        if reduce(parse_word(f"g({alpha}) g({beta})")) != reduce(
            parse_word(f"g({(alpha + beta) / 2}) g({alpha})")
        ):
            stats.record_failure("relation", f"alpha={alpha} beta={beta}")
        eps, delta = (int(rng.choice([-1, 1])) for _ in range(2))
        stats.record_check()
        try:
            if not verify_swap_rule(alpha, beta, eps, delta):
                stats.record_failure("swap oracle", f"{alpha} {beta} {eps} {delta}")
        except OracleUndecided as e:
            stats.record_failure("swap oracle undecided", str(e))

    for _ in range(swaps):
        a, b, c = (random_element(rng) for _ in range(3))
        if compare(a, b) is not Ordering.LESS:
            a, b = b, a
        if compare(a, b) is not Ordering.LESS:
            continue
        stats.record_check()
        if compare(add(a, c), add(b, c)) is not Ordering.LESS or compare(
            add(c, a), add(c, b)
        ) is not Ordering.LESS:
            stats.record_failure("order compatibility", f"{a} < {b}, c={c}")

    probes = {}
    for anchor, closed in CLIFFORD_PROBES:
        segment = FinalSegment(parse_element(anchor), closed)
        result = probe_final_segment_normality(segment, 200, seed)
        stats.record_check()
        if not isinstance(result, Witness):
            stats.record_failure("probe", f"no witness for {segment}")
            probes[str(segment)] = "none found"
            continue
        if not (
            segment.contains(result.f)
            and not segment.contains(result.result)
            and conjugate(result.f, result.u) == result.result
        ):
            stats.record_failure("probe witness", str(segment))
        probes[str(segment)] = result.strategy

    stats.record_check()
    if not isinstance(probe_final_segment_normality(FinalSegment.positive_cone(), 50, seed), NoneFound):
        stats.record_failure("positive cone", "positive cone reported as not normal")
    return {"trials": trials, "probes": probes}


# ============================================
# Runner
# ============================================


class CorpusVerifier:
    """
    Runs the invariant suites for one suite size and collects SuiteResults.
    """

    def __init__(self, suite: str = "standard", settings: Optional[Settings] = None):
        if suite not in SUITES:
            raise ValueError(f"unknown suite {suite!r}, expected one of {sorted(SUITES)}")
        self.suite = suite
        self.settings = settings or get_settings()
        self.params = dict(SUITES[suite])
        if self.settings.max_n is not None:
            self.params["max_n"] = self.settings.max_n
        if self.settings.trials is not None:
            self.params["fuzz_trials"] = self.settings.trials
        self.results: List[SuiteResult] = []
        self.stats = CheckStats()
        self.start_time = None
        self.end_time = None
        self._posets: Optional[List[FinitePoset]] = None

        logger.info(f"Verifier initialized: suite={suite} params={self.params}")

    @property
    def posets(self) -> List[FinitePoset]:
        if self._posets is None:
            cache = CorpusCache(self.settings.cache_dir)
            self._posets = corpus(self.params["max_n"], cache)
        return self._posets

    def suites(self) -> Dict[str, Callable[[CheckStats], Dict]]:
        cap = self.settings.window_cap
        seed = self.settings.seed
        return {
            "ground_truth": check_ground_truth,
            "reconstruction": lambda s: check_reconstruction(self.posets, s),
            "corpus_equivalences": lambda s: check_corpus_equivalences(self.posets, s),
            "unit_representations": lambda s: check_unit_representations(self.posets, s),
            "dimension_bound": lambda s: check_dimension_bound(self.posets, s),
            "realizer": check_realizer,
            "pattern_transfer": lambda s: check_pattern_transfer(s, self.params, cap),
            "random_weight_orders": lambda s: check_random_weight_orders(s, self.params, seed, cap),
            "lex_plane": lambda s: check_lex_plane(s, cap),
            "weak_order": lambda s: check_weak_order(s, cap),
            "product_examples": lambda s: check_product_examples(s, cap),
            "group_windows": lambda s: check_group_windows(s, self.params["compat_trials"], seed, cap),
            "convex_subgroups": lambda s: check_convex_subgroups(s, self.params, seed),
            "clifford": lambda s: check_clifford(s, self.params["fuzz_trials"], seed),
            "battery": check_battery,
        }

    def run_suite(self, name: str, fn: Callable[[CheckStats], Dict]) -> SuiteResult:
        stats = CheckStats()
        start = time.time()
        try:
            details = fn(stats)
            error = None
        except Exception as e:
            logger.exception(f"Suite {name} aborted")
            details = {}
            error = f"{type(e).__name__}: {e}"
        elapsed = time.time() - start
        self.stats.merge(stats)

        if stats.failures:
            details["failure_examples"] = stats.examples
        return SuiteResult(
            name=name,
            passed=error is None and stats.total_failures == 0 and stats.total_checks > 0,
            checks=stats.total_checks,
            failures=stats.total_failures,
            time_taken=elapsed,
            details=details,
            error=error,
        )

    def run_all(self, only: Optional[List[str]] = None) -> List[SuiteResult]:
        self.start_time = time.time()
        self.results = []

        print("\n" + "=" * 60)
        print(f"CORPUS VERIFICATION ({self.suite.upper()}, n <= {self.params['max_n']})")
        print("=" * 60)

        for name, fn in self.suites().items():
            if only and name not in only:
                continue
            result = self.run_suite(name, fn)
            self.results.append(result)
            icon = "✓" if result.passed else "✗"
            print(f"  {icon} {name}: {result.checks} checks, {result.failures} failures")
            if result.error:
                print(f"      aborted: {result.error[:100]}")
            logger.info(f"{name} took {result.time_taken:.1f}s")

        self.end_time = time.time()
        return self.results

    def generate_report(self) -> Dict:
        rows = [asdict(r) for r in self.results]
        return {
            "suite": self.suite,
            "params": self.params,
            "timestamp": str(datetime.now()),
            "summary": ResultAggregator.aggregate(rows),
            "by_module": ResultAggregator.by_module(rows),
            "detailed_results": rows,
        }

    def save_results(self, output_file: Optional[Path] = None) -> Path:
        if output_file is None:
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            output_file = self.settings.results_dir / f"results_{self.suite}_{timestamp}.json"
        output_file.parent.mkdir(parents=True, exist_ok=True)
        with open(output_file, "w") as f:
            json.dump(self.generate_report(), f, indent=2, default=str)
        logger.info(f"Results saved to: {output_file}")
        return output_file

    @property
    def all_passed(self) -> bool:
        return bool(self.results) and all(r.passed for r in self.results)


def run_verification(suite: str, settings: Optional[Settings] = None) -> bool:
    verifier = CorpusVerifier(suite, settings)
    verifier.run_all()
    verifier.stats.print_summary("CORPUS VERIFICATION CHECKS")
    verifier.save_results()
    return verifier.all_passed


def main():
    parser = argparse.ArgumentParser(description="Run the acceptance suites")
    parser.add_argument("--suite", choices=sorted(SUITES), default="standard")
    parser.add_argument("--max-n", type=int)
    parser.add_argument("--trials", type=int)
    args = parser.parse_args()

    try:
        settings = get_settings().with_overrides(max_n=args.max_n, trials=args.trials)
    except ValidationError as e:
        parser.error(str(e))
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    sys.exit(0 if run_verification(args.suite, settings) else 1)


if __name__ == "__main__":
    main()
