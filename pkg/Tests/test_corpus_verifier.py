"""
Test the acceptance suites at small sizes, and the report they produce.
"""

import json

import pytest

from aggregation import ResultAggregator
from config import Settings
from corpus import corpus
from corpus_verifier import (
    CorpusVerifier,
    check_battery,
    check_clifford,
    check_convex_subgroups,
    check_corpus_equivalences,
    check_group_windows,
    check_lex_plane,
    check_realizer,
    check_reconstruction,
    check_unit_representations,
    check_weak_order,
)
from error_handler import CheckStats
from instances import GROUP_INSTANCES

CAP = 5000


def run_check(fn, *args):
    stats = CheckStats()
    return stats, fn(stats, *args)


def test_corpus_equivalences_small():
    stats, details = run_check(lambda s: check_corpus_equivalences(corpus(4), s))
    assert stats.total_failures == 0, stats.examples
    assert details["by_size"]["4"] == {"posets": 16, "interval": 15, "semiorder": 14, "weak": 8}


def test_reconstruction_small():
    stats, details = run_check(lambda s: check_reconstruction(corpus(4), s))
    assert stats.total_failures == 0, stats.examples
    assert sum(details["posets_by_part_count"].values()) == 1 + 2 + 5 + 16
    # the chain of 4 splits into four singletons
    assert details["posets_by_part_count"]["4"] >= 1


def test_unit_representations_small():
    stats, details = run_check(lambda s: check_unit_representations(corpus(4), s))
    assert stats.total_failures == 0, stats.examples
    assert details["unit_representations"] == 1 + 2 + 5 + 14


def test_realizer_suite():
    stats, details = run_check(check_realizer)
    assert stats.total_failures == 0
    assert details["window_sizes"] == {"1": 9, "2": 17, "3": 25}


def test_lex_plane_suite():
    stats, details = run_check(check_lex_plane, CAP)
    assert stats.total_failures == 0, stats.examples
    assert details["A"] == "span{(1,0)}"


def test_weak_order_suite():
    stats, _ = run_check(check_weak_order, CAP)
    assert stats.total_failures == 0, stats.examples


def test_group_windows_suite():
    stats, details = run_check(check_group_windows, 2000, 0, CAP)
    assert stats.total_failures == 0, stats.examples
    assert set(details) == {instance["name"] for instance in GROUP_INSTANCES}
    assert all(row["comparable_triples"] > 0 for row in details.values())


def test_convex_subgroups_suite():
    params = {"random_specs": 5, "random_radius": 3}
    stats, details = run_check(check_convex_subgroups, params, 0)
    assert stats.total_failures == 0, stats.examples
    assert details["levels"]["lex-plane"] == 3
    assert details["levels"]["z-theta-2"] == 2
    assert len(details["levels"]) == 7


def test_battery_suite():
    stats, details = run_check(check_battery)
    assert stats.total_failures == 0
    assert details["2+2 <= chain-2"] == "Z, natural order"
    assert details["2+2 <= 3+1"] == "not refuted"


def test_clifford_suite():
    stats, details = run_check(check_clifford, 20, 0)
    assert stats.total_failures == 0, stats.examples
    assert len(details["probes"]) == 3


@pytest.fixture
def settings(tmp_path):
    return Settings(max_n=3, trials=10, cache_dir=tmp_path / "cache", results_dir=tmp_path / "results")


def test_verifier_runs_selected_suites(settings, tmp_path):
    verifier = CorpusVerifier("quick", settings)
    assert verifier.params["max_n"] == 3
    assert verifier.params["fuzz_trials"] == 10

    results = verifier.run_all(only=["ground_truth", "realizer", "corpus_equivalences"])
    assert [r.name for r in results] == ["ground_truth", "corpus_equivalences", "realizer"]
    assert verifier.all_passed

    report = verifier.generate_report()
    assert report["summary"]["total_suites"] == 3
    assert report["summary"]["all_passed"]
    assert set(report["by_module"]) == {"poset-core", "order-classify", "order-represent"}

    path = verifier.save_results(tmp_path / "out" / "results.json")
    saved = json.loads(path.read_text(encoding="utf-8"))
    assert saved["suite"] == "quick"
    assert len(saved["detailed_results"]) == 3


def test_verifier_records_aborted_suites(settings):
    verifier = CorpusVerifier("quick", settings)

    def broken(stats):
        stats.record_check()
        raise RuntimeError("boom")

    result = verifier.run_suite("broken", broken)
    assert not result.passed
    assert result.error == "RuntimeError: boom"


def test_unknown_suite_rejected(settings):
    with pytest.raises(ValueError):
        CorpusVerifier("huge", settings)


def test_result_aggregator():
    rows = [
        {"name": "realizer", "passed": True, "checks": 6, "failures": 0, "time_taken": 1.0},
        {"name": "clifford", "passed": False, "checks": 10, "failures": 2, "time_taken": 2.0},
        {
            "name": "battery",
            "passed": False,
            "checks": 0,
            "failures": 0,
            "time_taken": 0.5,
            "error": "ValueError: too big",
        },
    ]
    summary = ResultAggregator.aggregate(rows)
    assert summary["passed_suites"] == 1
    assert summary["pass_rate"] == pytest.approx(1 / 3)
    assert summary["total_checks"] == 16
    assert summary["total_failures"] == 2
    assert not summary["all_passed"]
    assert summary["errors"] == {"ValueError": 1}

    modules = ResultAggregator.by_module(rows)
    assert modules["order-represent"]["checks"] == 6
    assert modules["ogroup-engine"]["suites"] == 1
    assert ResultAggregator.aggregate([])["pass_rate"] == 0.0
