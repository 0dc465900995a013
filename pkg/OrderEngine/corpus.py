"""
Exhaustive corpus of small posets, one representative per isomorphism class.

Every poset on n elements has a maximal element; deleting it leaves a poset on
n-1 elements whose down-set under the deleted element is an order ideal. So
extending each (n-1)-element representative by a new top above each of its
ideals reaches every class, and isomorphism testing removes the repeats.
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from corpus_cache import CorpusCache
from poset_core import FinitePoset, build_poset, is_isomorphic

logger = logging.getLogger(__name__)

# Number of unlabeled posets on n elements, n = 0..7
KNOWN_COUNTS = (1, 1, 2, 5, 16, 63, 318, 2045)

_memo: Dict[int, List[FinitePoset]] = {}


def _ideals(P: FinitePoset) -> List[int]:
    """All down-closed subsets of P as bitmasks."""
    ideals = []
    for subset in range(1 << P.n):
        closed = True
        rest = subset
        while rest:
            low = rest & -rest
            x = low.bit_length() - 1
            if P.down_masks[x] & ~subset:
                closed = False
                break
            rest ^= low
        if closed:
            ideals.append(subset)
    return ideals


def _extend_by_top(P: FinitePoset, ideal: int) -> FinitePoset:
    n = P.n
    lt = np.zeros((n + 1, n + 1), dtype=bool)
    lt[:n, :n] = P.lt
    for x in range(n):
        if ideal >> x & 1:
            lt[x, n] = True
    return FinitePoset(lt)


def _to_json(posets: List[FinitePoset]) -> List[List[List[int]]]:
    return [[list(edge) for edge in P.cover_edges()] for P in posets]


def _from_json(n: int, data: List[List[List[int]]]) -> List[FinitePoset]:
    return [build_poset(n, [tuple(edge) for edge in edges]) for edges in data]


def enumerate_posets(n: int, cache: Optional[CorpusCache] = None) -> List[FinitePoset]:
    """One poset per isomorphism class on exactly n elements."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n == 0:
        return [build_poset(0, [])]

    if n in _memo:
        return list(_memo[n])

    key = f"posets:n={n}"
    if cache is not None:
        data = cache.get(key)
        if data is not None:
            logger.info(f"Loaded {len(data)} posets on {n} elements from cache")
            _memo[n] = _from_json(n, data)
            return list(_memo[n])

    buckets: Dict[Tuple, List[FinitePoset]] = {}
    found: List[FinitePoset] = []
    for P in enumerate_posets(n - 1, cache):
        for ideal in _ideals(P):
            candidate = _extend_by_top(P, ideal)
            bucket_key = (int(candidate.lt.sum()), candidate.signature())
            bucket = buckets.setdefault(bucket_key, [])
            if any(is_isomorphic(candidate, seen) for seen in bucket):
                continue
            bucket.append(candidate)
            found.append(candidate)

    logger.info(f"Enumerated {len(found)} posets on {n} elements")
    if cache is not None:
        cache.set(key, _to_json(found))
    _memo[n] = found
    return list(found)


def corpus(max_n: int, cache: Optional[CorpusCache] = None) -> List[FinitePoset]:
    """All isomorphism classes with 1..max_n elements, smallest first."""
    posets: List[FinitePoset] = []
    for n in range(1, max_n + 1):
        posets.extend(enumerate_posets(n, cache))
    return posets
