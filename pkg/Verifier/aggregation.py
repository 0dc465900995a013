"""
Aggregation of verifier suite results into the summary written to results.json.
"""

from collections import Counter
from typing import Dict, List

# Which engine module each suite exercises, for the by-module breakdown.
SUITE_MODULES = {
    "corpus_equivalences": "order-classify",
    "unit_representations": "order-represent",
    "dimension_bound": "order-represent",
    "realizer": "order-represent",
    "pattern_transfer": "ogroup-engine",
    "random_weight_orders": "ogroup-engine",
    "lex_plane": "ogroup-engine",
    "weak_order": "ogroup-engine",
    "product_examples": "ogroup-engine",
    "clifford": "clifford-group",
    "battery": "ogroup-engine",
    "ground_truth": "poset-core",
    "reconstruction": "poset-core",
    "group_windows": "ogroup-engine",
    "convex_subgroups": "ogroup-engine",
}


class ResultAggregator:
    """
    Summary statistics over a list of suite result dicts
    (name, passed, checks, failures, time_taken, details, error).
    """

    @staticmethod
    def pass_rate(results: List[Dict]) -> float:
        if not results:
            return 0.0
        return sum(1 for r in results if r["passed"]) / len(results)

    @staticmethod
    def check_totals(results: List[Dict]) -> Dict[str, int]:
        checks = sum(r["checks"] for r in results)
        failures = sum(r["failures"] for r in results)
        return {"checks": checks, "failures": failures}

    @staticmethod
    def by_module(results: List[Dict]) -> Dict[str, Dict]:
        grouped: Dict[str, List[Dict]] = {}
        for r in results:
            grouped.setdefault(SUITE_MODULES.get(r["name"], "other"), []).append(r)
        return {
            module: {
                "suites": len(rs),
                "passed": sum(1 for r in rs if r["passed"]),
                "checks": sum(r["checks"] for r in rs),
                "failures": sum(r["failures"] for r in rs),
                "time_taken": sum(r["time_taken"] for r in rs),
            }
            for module, rs in sorted(grouped.items())
        }

    @staticmethod
    def error_types(results: List[Dict]) -> Dict[str, int]:
        """Exceptions that aborted a suite, by type name."""
        counter = Counter(r["error"].split(":", 1)[0] for r in results if r.get("error"))
        return dict(counter)

    @staticmethod
    def aggregate(results: List[Dict]) -> Dict:
        totals = ResultAggregator.check_totals(results)
        return {
            "total_suites": len(results),
            "passed_suites": sum(1 for r in results if r["passed"]),
            "pass_rate": ResultAggregator.pass_rate(results),
            "total_checks": totals["checks"],
            "total_failures": totals["failures"],
            "total_time": sum(r["time_taken"] for r in results),
            "all_passed": bool(results) and all(r["passed"] for r in results),
            "errors": ResultAggregator.error_types(results),
        }
