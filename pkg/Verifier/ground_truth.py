"""
Known answers used as oracles by the verifier.

Counts are the standard enumerations of unlabeled posets, interval orders
(Fishburn numbers), semiorders (Catalan numbers) and weak orders (2^(n-1)).
Everything else was worked out by hand from the definitions.
"""

from typing import Dict, List, Set, Tuple

from group_specs import Window

POSET_COUNTS = {0: 1, 1: 1, 2: 2, 3: 5, 4: 16, 5: 63, 6: 318, 7: 2045}

INTERVAL_ORDER_COUNTS = {1: 1, 2: 2, 3: 5, 4: 15, 5: 53, 6: 217, 7: 1014}

SEMIORDER_COUNTS = {1: 1, 2: 2, 3: 5, 4: 14, 5: 42, 6: 132, 7: 429}

WEAK_ORDER_COUNTS = {n: 2 ** (n - 1) for n in range(1, 8)}

GROUND_TRUTH = {
    "2+2": {
        "interval": False,
        "semiorder": False,
        "weak": False,
        "threshold": False,
        "dimension": 2,
        "notes": "The forbidden pattern for interval orders",
    },
    "3+1": {
        "interval": True,
        "semiorder": False,
        "weak": False,
        "threshold": False,
        "dimension": 2,
        "notes": "Interval order that is not a semiorder",
    },
    "1+2": {
        "interval": True,
        "semiorder": True,
        "weak": False,
        "threshold": False,
        "dimension": 2,
        "notes": "Forbidden pattern for weak orders",
    },
    "2+1": {
        "interval": True,
        "semiorder": True,
        "weak": False,
        "threshold": False,
        "dimension": 2,
        "notes": "Semiorder whose pred and succ traces differ",
    },
    "chain-3": {
        "interval": True,
        "semiorder": True,
        "weak": True,
        "threshold": True,
        "dimension": 1,
    },
    "antichain-3": {
        "interval": True,
        "semiorder": True,
        "weak": True,
        "threshold": False,
        "dimension": 2,
        "notes": "pred is total but every element is equivalent",
    },
    "crown-3": {
        "interval": False,
        "semiorder": False,
        "weak": False,
        "threshold": False,
        "dimension": 3,
        "notes": "Standard example S3; contains 2+2",
    },
    "threshold-3-on-7": {
        "interval": True,
        "semiorder": True,
        "weak": False,
        "threshold": False,
        "dimension": 3,
        "notes": "Semiorder of dimension 3: incomparability graph is the square of a 7-path",
    },
}

GROUP_GROUND_TRUTH = {
    "lex-plane": {"K": "{0}", "A": "span{(1,0)}", "I": "Z^2", "semiorder": True, "threshold": True},
    "z-theta-2": {"K": "{0}", "A": "{0}", "I": "Z", "semiorder": True, "threshold": True},
    "lexprod-z2": {
        "K": "Z/2 x {0}",
        "A": "Z/2 x {0}",
        "I": "Z/2 x Z",
        "semiorder": True,
        "threshold": False,
    },
    "lexprod-z2-natural": {
        "K": "Z/2 x {0}",
        "A": "Z/2 x {0}",
        "I": "Z/2 x {0}",
        "semiorder": True,
        "threshold": False,
    },
    "lexsum": {
        "K": "{0} x {0}",
        "A": "{0} x {0}",
        "I": "Z x {0}",
        "semiorder": True,
        "threshold": True,
    },
    "odot": {"K": "{0} x {0}", "A": "Z x {0}", "I": "Z x Z", "semiorder": True, "threshold": True},
}

CLIFFORD_REDUCTIONS = {
    "g(1) g(0)": "+1*g(1/2) +1*g(1)",
    "g(0) g(1)": "+1*g(0) +1*g(1)",
    "g(2) g(0)^-1": "-1*g(1) +1*g(2)",
    "g(1) g(1)^-1": "0",
}

CLIFFORD_PROBES = [
    ("g(0)", True),
    ("g(0)", False),
    ("g(5)^2", True),
]

BATTERY_REFUTED = [("2+2", "chain-2"), ("antichain-3", "antichain-2")]

BATTERY_NOT_REFUTED = [
    (p, q) for p in ("2+2", "3+1", "1+3") for q in ("2+2", "3+1", "1+3") if p != q
]


def get_ground_truth(name: str) -> dict:
    if name in GROUND_TRUTH:
        return GROUND_TRUTH[name]
    if name in GROUP_GROUND_TRUTH:
        return GROUP_GROUND_TRUTH[name]
    return {}


def lex_plane_inc0(window: Window) -> Set[Tuple[int, int]]:
    """{(n,0): n≠0} ∪ {(n,1): n<0} ∪ {(n,-1): n>0}, cut to the window."""
    (lo, hi), (lo2, hi2) = window.bounds
    points = set()
    for n in range(lo, hi + 1):
        if n != 0:
            points.add((n, 0))
        if n < 0 and lo2 <= 1 <= hi2:
            points.add((n, 1))
        if n > 0 and lo2 <= -1 <= hi2:
            points.add((n, -1))
    return points


def mismatches(name: str, observed: Dict[str, object]) -> List[str]:
    """Fields where observed disagrees with the ground truth for name."""
    expected = get_ground_truth(name)
    return [
        f"{name}.{key}: expected {expected[key]}, got {value}"
        for key, value in observed.items()
        if key in expected and expected[key] != value
    ]
