"""
Clifford's group: generators g(α), one per rational α, subject to

    g(α) g(β) = g((α+β)/2) g(α)        whenever α > β

written multiplicatively, words read left to right. Every element has a
normal form m₁ g(α₁) + … + m_s g(α_s) with α₁ < … < α_s and all mᵢ ≠ 0,
stored as a tuple of syllables (α, m). The order: a ≻ 0 iff m_s > 0.

Reduction swaps syllables out of order. g(α)^m passes g(β)^k, α > β, as

    g(α)^m g(β)^k  ->  g(α - (α-β)·2^(-m))^k g(α)^m

which is the m-fold composition of the relation above (m < 0 uses its
inverse, β -> 2β - α). The inverse-letter cases are checked separately by
verify_swap_rule, which only uses forward applications of the relation.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np

from config import get_settings
from error_handler import InvalidSegment, OracleUndecided, ParsingError, TheoremViolation
from group_specs import Ordering

logger = logging.getLogger(__name__)

Syllable = Tuple[Fraction, int]

MAX_EXPONENT = 10_000


@dataclass(frozen=True)
class CliffordLetter:
    alpha: Fraction
    exponent: int = 1

    def __post_init__(self):
        if self.exponent not in (1, -1):
            raise ValueError(f"letter exponent must be +1 or -1, got {self.exponent}")
        object.__setattr__(self, "alpha", Fraction(self.alpha))

    def inverse(self) -> "CliffordLetter":
        return CliffordLetter(self.alpha, -self.exponent)


@dataclass(frozen=True)
class CliffordWord:
    letters: Tuple[CliffordLetter, ...] = ()

    def __add__(self, other: "CliffordWord") -> "CliffordWord":
        return CliffordWord(self.letters + other.letters)

    def inverse(self) -> "CliffordWord":
        return CliffordWord(tuple(letter.inverse() for letter in reversed(self.letters)))

    def syllables(self) -> List[Syllable]:
        return [(letter.alpha, letter.exponent) for letter in self.letters]

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class CliffordElement:
    """Normal form: strictly increasing alphas, nonzero exponents."""

    terms: Tuple[Syllable, ...] = ()

    def __post_init__(self):
        terms = tuple((Fraction(a), int(m)) for a, m in self.terms)
        for (a, m), (b, _) in zip(terms, terms[1:]):
            if not a < b:
                raise ValueError(f"alphas must increase strictly, got {a} before {b}")
        if any(m == 0 for _, m in terms):
            raise ValueError("normal form exponents must be nonzero")
        object.__setattr__(self, "terms", terms)

    @property
    def is_identity(self) -> bool:
        return not self.terms

    @property
    def top(self) -> Optional[Syllable]:
        return self.terms[-1] if self.terms else None

    def to_word(self) -> CliffordWord:
        letters = []
        for alpha, m in self.terms:
            letters.extend([CliffordLetter(alpha, 1 if m > 0 else -1)] * abs(m))
        return CliffordWord(tuple(letters))

    def __str__(self) -> str:
        return format_element(self)


def g(alpha, m: int = 1) -> CliffordElement:
    """The element g(α)^m."""
    return CliffordElement(((Fraction(alpha), m),)) if m else CliffordElement()


def identity() -> CliffordElement:
    return CliffordElement()


# ============================================
# Reduction
# ============================================


def _measure(syllables: Sequence[Syllable]) -> Tuple[int, List[Tuple[Fraction, int]]]:
    """(syllable count, sorted (-α, distance to end)); drops with every rewrite."""
    length = len(syllables)
    return length, sorted((-a, length - i) for i, (a, _) in enumerate(syllables))


def _rewrite_at(s: List[Syllable], i: int) -> bool:
    """Merge or swap syllables i, i+1 in place; False if they are in order."""
    (a, m), (b, k) = s[i], s[i + 1]
    if a == b:
        if m + k:
            s[i : i + 2] = [(a, m + k)]
        else:
            del s[i : i + 2]
        return True
    if a > b:
        s[i], s[i + 1] = (a - (a - b) / Fraction(2) ** m, k), (a, m)
        return True
    return False


def reduce_syllables(
    syllables: Sequence[Syllable], strategy: str = "leftmost", check: Optional[bool] = None
) -> CliffordElement:
    """Normal form of a product of syllables.

    leftmost: rewrite the first pair out of order, then step back one place.
    rightmost: scan from the right end, stepping forward after each rewrite.
    """
    if strategy not in ("leftmost", "rightmost"):
        raise ValueError(f"unknown strategy {strategy!r}")
    check = get_settings().debug_checks if check is None else check

    s: List[Syllable] = [(Fraction(a), int(m)) for a, m in syllables if m]
    measure = _measure(s) if check else None

    def step(i: int) -> bool:
        nonlocal measure
        if not _rewrite_at(s, i):
            return False
        if check:
            new = _measure(s)
            if not new < measure:
                raise TheoremViolation(f"reduction measure did not drop at position {i}")
            measure = new
        return True

    if strategy == "leftmost":
        i = 0
        while i < len(s) - 1:
            if step(i):
                i = max(i - 1, 0)
            else:
                i += 1
    else:
        i = len(s) - 2
        while i >= 0:
            if step(i):
                i = min(i + 1, len(s) - 2)
            else:
                i -= 1

    return CliffordElement(tuple(s))


def reduce(word: CliffordWord, strategy: str = "leftmost", check: Optional[bool] = None) -> CliffordElement:
    return reduce_syllables(word.syllables(), strategy, check)


# ============================================
# Group operations and order
# ============================================


def add(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    return reduce_syllables(a.terms + b.terms)


def neg(a: CliffordElement) -> CliffordElement:
    return reduce_syllables(tuple((alpha, -m) for alpha, m in reversed(a.terms)))


def conjugate(a: CliffordElement, u: CliffordElement) -> CliffordElement:
    """u⁻¹ · a · u"""
    return reduce_syllables(neg(u).terms + a.terms + u.terms)


def sign(a: CliffordElement) -> int:
    if a.is_identity:
        return 0
    return 1 if a.terms[-1][1] > 0 else -1


def compare(a: CliffordElement, b: CliffordElement) -> Ordering:
    s = sign(add(neg(a), b))
    return {1: Ordering.LESS, 0: Ordering.EQUAL, -1: Ordering.GREATER}[s]


def dominating_generator(a: CliffordElement) -> Fraction:
    """β with a ≺ g(β)."""
    if a.is_identity:
        return Fraction(0)
    return a.terms[-1][0] + 1


# ============================================
# Independent check of the swap rules
# ============================================


def _free_reduce(letters: List[Tuple[Fraction, int]]) -> List[Tuple[Fraction, int]]:
    out: List[Tuple[Fraction, int]] = []
    for letter in letters:
        if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
            out.pop()
        else:
            out.append(letter)
    while len(out) >= 2 and out[0][0] == out[-1][0] and out[0][1] == -out[-1][1]:
        out = out[1:-1]
    return out


def _positive_form(alphas: List[Fraction]) -> Tuple[Fraction, ...]:
    """Sort a positive word using only g(α)g(β) -> g((α+β)/2)g(α), α > β."""
    w = list(alphas)
    i = 0
    while i < len(w) - 1:
        if w[i] > w[i + 1]:
            w[i], w[i + 1] = (w[i] + w[i + 1]) / 2, w[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return tuple(w)


def oracle_is_identity(word: CliffordWord) -> bool:
    """Decide word = 1 for words that are, up to cyclic rotation, a positive
    block followed by a negative block: P·N = 1 iff P = N⁻¹."""
    letters = _free_reduce([(letter.alpha, letter.exponent) for letter in word.letters])
    if not letters:
        return True
    signs = [e for _, e in letters]
    if all(e == signs[0] for e in signs):
        return False
    runs = sum(1 for i in range(len(signs)) if signs[i] != signs[i - 1])
    if runs != 2:
        raise OracleUndecided(f"word has {runs // 2} positive blocks")

    start = next(i for i in range(len(signs)) if signs[i] == 1 and signs[i - 1] == -1)
    rotated = letters[start:] + letters[:start]
    cut = next(i for i, (_, e) in enumerate(rotated) if e == -1)
    positive = [a for a, _ in rotated[:cut]]
    negative_inverse = [a for a, _ in reversed(rotated[cut:])]
    return _positive_form(positive) == _positive_form(negative_inverse)


def verify_swap_rule(alpha, beta, eps: int, delta: int) -> bool:
    """Check g(α)^ε g(β)^δ = g(β')^δ g(α)^ε, β' = α - (α-β)·2^(-ε), with the oracle."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not alpha > beta:
        raise ValueError(f"swap rules need alpha > beta, got {alpha} <= {beta}")
    moved = alpha - (alpha - beta) / Fraction(2) ** eps
    left = CliffordWord((CliffordLetter(alpha, eps), CliffordLetter(beta, delta)))
    right = CliffordWord((CliffordLetter(moved, delta), CliffordLetter(alpha, eps)))
    return oracle_is_identity(left + right.inverse())


# ============================================
# Final segments
# ============================================


@dataclass(frozen=True)
class FinalSegment:
    """{x ⪰ anchor} when closed, {x ≻ anchor} when open."""

    anchor: CliffordElement
    closed: bool = True

    @classmethod
    def positive_cone(cls) -> "FinalSegment":
        return cls(identity(), closed=False)

    @property
    def is_positive_cone(self) -> bool:
        return self.anchor.is_identity and not self.closed

    def contains(self, x: CliffordElement) -> bool:
        order = compare(self.anchor, x)
        return order is Ordering.LESS or (self.closed and order is Ordering.EQUAL)

    def __str__(self) -> str:
        return f"{{x {'>=' if self.closed else '>'} {format_element(self.anchor)}}}"


@dataclass(frozen=True)
class Witness:
    f: CliffordElement
    u: CliffordElement
    result: CliffordElement
    strategy: str


@dataclass(frozen=True)
class NoneFound:
    trials: int


def random_element(rng: np.random.Generator, max_terms: int = 4, span: int = 4, depth: int = 3) -> CliffordElement:
    """Random product of dyadic syllables, reduced."""
    count = int(rng.integers(1, max_terms + 1))
    syllables = []
    for _ in range(count):
        alpha = Fraction(int(rng.integers(-span * 2**depth, span * 2**depth + 1)), 2**depth)
        m = int(rng.choice([-2, -1, 1, 2]))
        syllables.append((alpha, m))
    return reduce_syllables(syllables)


def random_word(rng: np.random.Generator, length: int = 12, span: int = 4, depth: int = 3) -> CliffordWord:
    letters = []
    for _ in range(int(rng.integers(0, length + 1))):
        alpha = Fraction(int(rng.integers(-span * 2**depth, span * 2**depth + 1)), 2**depth)
        letters.append(CliffordLetter(alpha, int(rng.choice([-1, 1]))))
    return CliffordWord(tuple(letters))


def _checked(F: FinalSegment, f: CliffordElement, u: CliffordElement, strategy: str) -> Optional[Witness]:
    if not F.contains(f):
        return None
    result = conjugate(f, u)
    if F.contains(result):
        return None
    return Witness(f, u, result, strategy)


def probe_final_segment_normality(
    F: FinalSegment, trials: int = 1000, seed: int = 0
) -> Union[Witness, NoneFound]:
    """Look for f ∈ F and u with u⁻¹fu ∉ F.

    Directed steps first: conjugating by a generator above everything pushes
    every alpha down; and a generator g(β₀) ∈ F conjugates to g(r) for any
    r < β₀ (u = g(2β₀ - r)), with g(r) below the anchor. Random trials last.
    """
    if not F.is_positive_cone:
        if sign(F.anchor) <= 0:
            raise InvalidSegment(f"anchor {format_element(F.anchor)} must be positive")

        anchor = F.anchor
        beta0 = dominating_generator(anchor)
        f = anchor if F.closed else g(beta0)
        witness = _checked(F, f, g(dominating_generator(f)), "generator-conjugation")
        if witness is not None:
            return witness

        r = anchor.terms[-1][0] - 1
        witness = _checked(F, g(beta0), g(2 * beta0 - r), "generator-descent")
        if witness is not None:
            return witness

    rng = np.random.default_rng(seed)
    base = g(1) if F.is_positive_cone else g(dominating_generator(F.anchor))
    for _ in range(trials):
        p = random_element(rng)
        if sign(p) < 0:
            p = neg(p)
        f = add(base, p) if sign(p) > 0 else base
        u = random_element(rng)
        witness = _checked(F, f, u, "random")
        if witness is not None:
            return witness
    logger.info(f"No conjugation witness for {F} in {trials} trials")
    return NoneFound(trials)


# ============================================
# Text format
# ============================================

_LETTER = re.compile(
    r"(?:([+-]?\d+)\s*[*·]\s*)?g\(\s*(-?\d+(?:/\d+)?)\s*\)(?:\^\(?(-?\d+)\)?)?"
)


def parse_word(text: str) -> CliffordWord:
    """Parse `g(3/2) g(0)^-1 g(1)^2`, or the `+2*g(1/2) -1*g(1)` form format_element prints."""
    letters: List[CliffordLetter] = []
    pos = 0
    for match in _LETTER.finditer(text):
        gap = text[pos : match.start()]
        if gap.strip(" \t*·"):
            raise ParsingError(f"unexpected text {gap.strip()!r} in word {text!r}")
        pos = match.end()
        try:
            alpha = Fraction(match.group(2))
        except ZeroDivisionError as e:
            raise ParsingError(f"zero denominator in {match.group(0)!r}") from e
        m = int(match.group(1)) if match.group(1) is not None else 1
        k = m * (int(match.group(3)) if match.group(3) is not None else 1)
        if k == 0 or abs(k) > MAX_EXPONENT:
            raise ParsingError(f"exponent must be a nonzero integer up to {MAX_EXPONENT}, got {k}")
        letters.extend([CliffordLetter(alpha, 1 if k > 0 else -1)] * abs(k))
    if text[pos:].strip(" \t*·"):
        raise ParsingError(f"unexpected text {text[pos:].strip()!r} in word {text!r}")
    return CliffordWord(tuple(letters))


def parse_element(text: str) -> CliffordElement:
    if text.strip() in ("0", "1", ""):
        return identity()
    return reduce(parse_word(text))


def format_element(a: CliffordElement) -> str:
    if a.is_identity:
        return "0"
    return " ".join(f"{m:+d}*g({alpha})" for alpha, m in a.terms)
