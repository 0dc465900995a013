"""
Hypothesis strategies for posets and Clifford words.
"""

from fractions import Fraction

from hypothesis import strategies as st

from clifford_group import CliffordLetter, CliffordWord, reduce_syllables
from poset_core import build_poset


@st.composite
def posets(draw, max_size: int = 6):
    """Transitive closure of random forward edges, so never cyclic."""
    n = draw(st.integers(min_value=1, max_value=max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), max_size=len(pairs))) if pairs else []
    return build_poset(n, edges)


def dyadics(span: int = 4, depth: int = 2):
    scale = 2**depth
    return st.integers(min_value=-span * scale, max_value=span * scale).map(
        lambda k: Fraction(k, scale)
    )


def letters():
    return st.builds(CliffordLetter, dyadics(), st.sampled_from([1, -1]))


def words(max_size: int = 8):
    return st.lists(letters(), max_size=max_size).map(lambda ls: CliffordWord(tuple(ls)))


def elements(max_terms: int = 3):
    syllables = st.tuples(dyadics(), st.sampled_from([-2, -1, 1, 2]))
    return st.lists(syllables, max_size=max_terms).map(reduce_syllables)
