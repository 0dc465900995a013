"""
Named posets and group specs used by the verifier, plus the suite sizes.
"""

from group_specs import (
    FinalSegmentSpec,
    LexProductGroup,
    LexSumGroup,
    OdotGroup,
    WeightOrderSpec,
    ZnGroup,
)
from poset_core import antichain, build_poset, chain, chains_sum, crown


def integer_group(t: int, closed: bool = True) -> ZnGroup:
    return ZnGroup(
        weights=WeightOrderSpec.identity(1),
        threshold=FinalSegmentSpec(theta=(t,), closed=closed),
    )


def lex_plane_group() -> ZnGroup:
    """ℤ² ordered by the second coordinate, then the first; threshold (0,1)."""
    return ZnGroup(
        weights=WeightOrderSpec(rows=((0, 1), (1, 0))),
        threshold=FinalSegmentSpec(theta=(0, 1), closed=True),
    )


def lexprod_group(k: int = 2, t: int = 2) -> LexProductGroup:
    """ℤ/k × (ℤ, ≤_t), compared on the ℤ coordinate only."""
    return LexProductGroup(factor=k, base=integer_group(t))


def lexsum_group(t: int = 2) -> LexSumGroup:
    """(ℤ, ≤_t) summed lexicographically over ℤ."""
    return LexSumGroup(outer=WeightOrderSpec.identity(1), inner=integer_group(t))


def odot_group() -> OdotGroup:
    """ℤ ⊙ ℤ with F = {k >= 1} and attained threshold 1."""
    return OdotGroup(
        a_order=WeightOrderSpec.identity(1),
        segment=FinalSegmentSpec(theta=(1,), closed=True),
        base=integer_group(1),
        alpha=(1,),
    )


def threshold_window_poset(t: int, size: int):
    """(ℤ, ≤_t) on 0..size-1."""
    return build_poset(size, [(x, y) for x in range(size) for y in range(size) if y - x >= t])


POSET_INSTANCES = [
    {"name": "2+2", "build": lambda: chains_sum(2, 2), "category": "forbidden"},
    {"name": "3+1", "build": lambda: chains_sum(3, 1), "category": "forbidden"},
    {"name": "1+2", "build": lambda: chains_sum(1, 2), "category": "forbidden"},
    {"name": "2+1", "build": lambda: chains_sum(2, 1), "category": "small"},
    {"name": "chain-3", "build": lambda: chain(3), "category": "small"},
    {"name": "antichain-3", "build": lambda: antichain(3), "category": "small"},
    {"name": "crown-3", "build": lambda: crown(3), "category": "dimension"},
    {"name": "threshold-3-on-7", "build": lambda: threshold_window_poset(3, 7), "category": "dimension"},
]

GROUP_INSTANCES = [
    {"name": "lex-plane", "build": lex_plane_group, "radius": 5, "category": "zn"},
    {"name": "z-theta-2", "build": lambda: integer_group(2), "radius": 8, "category": "zn"},
    {"name": "lexprod-z2", "build": lambda: lexprod_group(2, 2), "radius": 4, "category": "product"},
    {"name": "lexprod-z2-natural", "build": lambda: lexprod_group(2, 1), "radius": 4, "category": "product"},
    {"name": "lexsum", "build": lexsum_group, "radius": 4, "category": "product"},
    {"name": "odot", "build": odot_group, "radius": 4, "category": "product"},
]

SUITES = {
    "quick": {
        "max_n": 5,
        "fuzz_trials": 500,
        "random_specs": 10,
        "random_radius": 4,
        "plane_radius": 3,
        "transfer_radius": 3,
        "compat_trials": 10_000,
    },
    "standard": {
        "max_n": 6,
        "fuzz_trials": 2000,
        "random_specs": 50,
        "random_radius": 5,
        "plane_radius": 4,
        "transfer_radius": 4,
        "compat_trials": 10_000,
    },
    "full": {
        "max_n": 7,
        "fuzz_trials": 10_000,
        "random_specs": 200,
        "random_radius": 6,
        "plane_radius": 5,
        "transfer_radius": 5,
        "compat_trials": 10_000,
    },
}


def get_instance(name: str) -> dict:
    for instance in POSET_INSTANCES + GROUP_INSTANCES:
        if instance["name"] == name:
            return instance
    raise KeyError(name)
