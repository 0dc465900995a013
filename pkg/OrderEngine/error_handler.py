"""
Error types for the order engine, plus a small check-statistics tracker.
"""

from typing import Dict, List


class OrderError(Exception):
    """Base exception for order engine errors"""

    pass


class ParsingError(OrderError):
    """Input text could not be parsed"""

    pass


class CycleError(OrderError):
    """Transitive closure made some element strictly below itself"""

    pass


class ArityError(OrderError, ValueError):
    """Number of components does not match the index poset"""

    pass


class DimensionError(OrderError, ValueError):
    """Group element has the wrong number of coordinates"""

    pass


class NotIntervalOrder(OrderError):
    """Poset embeds 2+2"""

    pass


class NotSemiorder(OrderError):
    """Poset embeds 2+2 or 3+1"""

    pass


class InfeasibleSystem(OrderError):
    """Difference-constraint system has a negative cycle"""

    pass


class CriteriaDisagreement(OrderError):
    """Pattern-based and trace-based recognition returned different answers"""

    pass


class TheoremViolation(OrderError):
    """A computed instance contradicts a proven statement"""

    pass


class InvalidKey(OrderError, ValueError):
    """Key function is not injective on the given elements"""

    pass


class NonPositiveAlpha(OrderError, ValueError):
    """Threshold must be strictly positive"""

    pass


class WindowTooLarge(OrderError):
    """Window holds more points than the configured cap"""

    pass


class UnsupportedCarrier(OrderError):
    """Operation has no exact formula for this kind of group"""

    pass


class InvalidSegment(OrderError, ValueError):
    """Final segment anchor is not positive"""

    pass


class OracleUndecided(OrderError):
    """Word equation cannot be brought to positive form by rotation"""

    pass


class CheckStats:
    """Track pass/fail counts per check type"""

    def __init__(self):
        self.total_checks = 0
        self.failures: Dict[str, int] = {}
        self.examples: Dict[str, List[str]] = {}

    def record_check(self):
        self.total_checks += 1

    def record_failure(self, check_type: str, example: str = ""):
        self.failures[check_type] = self.failures.get(check_type, 0) + 1
        if example:
            # keep the first few for the report
            kept = self.examples.setdefault(check_type, [])
            if len(kept) < 3:
                kept.append(example)

    def merge(self, other: "CheckStats"):
        self.total_checks += other.total_checks
        for check_type, count in other.failures.items():
            self.failures[check_type] = self.failures.get(check_type, 0) + count
        for check_type, kept in other.examples.items():
            mine = self.examples.setdefault(check_type, [])
            mine.extend(kept[: max(0, 3 - len(mine))])

    @property
    def total_failures(self) -> int:
        return sum(self.failures.values())

    def get_failure_rate(self) -> float:
        if self.total_checks == 0:
            return 0.0
        return self.total_failures / self.total_checks

    def print_summary(self, title: str = "CHECK STATISTICS"):
        print(f"\n{'=' * 60}")
        print(title)
        print(f"{'=' * 60}")
        print(f"Total checks: {self.total_checks}")
        print(f"Total failures: {self.total_failures}")
        print(f"Failure rate: {self.get_failure_rate():.1%}")

        if self.failures:
            print("\nFailures by type:")
            for check_type, count in sorted(
                self.failures.items(), key=lambda x: (-x[1], x[0])
            ):
                print(f"  {check_type}: {count}")
                for example in self.examples.get(check_type, []):
                    print(f"    e.g. {example}")
        print(f"{'=' * 60}\n")
