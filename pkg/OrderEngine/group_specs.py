"""
Represented ordered groups.

Elements are integer tuples. A coordinate is either free (a copy of ℤ) or
cyclic (ℤ/kℤ, stored as 0..k-1). Every group spec knows its strict positive
set F and derives its order from it: x < y iff y - x ∈ F.

    ZnGroup          ℤⁿ, weight-vector total order, principal final segment
    LexProductGroup  ℤ/kℤ (unordered) × G, ordered by the G coordinate only
    LexSumGroup      G × ℤᵐ, lexicographic: ℤᵐ decides, G breaks ties
    OdotGroup        A ⊙ G: (a,b) < (a',b') iff b'-b ≻ α, or b'-b = α and a'-a ∈ F_A
    ConeGroup        ℤ × (ℤ/kℤ)... with an explicit positive-cone predicate
"""

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from error_handler import DimensionError

logger = logging.getLogger(__name__)

Point = Tuple[int, ...]


class Ordering(Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_sign(values: Sequence[int]) -> int:
    for v in values:
        if v:
            return 1 if v > 0 else -1
    return 0


def lex_sign_array(diff: np.ndarray) -> np.ndarray:
    """lex_sign along the last axis."""
    nonzero = diff != 0
    first = nonzero.argmax(axis=-1)
    lead = np.take_along_axis(diff, first[..., None], axis=-1)[..., 0]
    return np.sign(lead) * nonzero.any(axis=-1)


def format_point(x: Sequence[int]) -> str:
    return "(" + ",".join(str(int(v)) for v in x) + ")"


# ============================================
# Weight orders on ℤⁿ
# ============================================


@lru_cache(maxsize=256)
def _kernel_basis(rows: Tuple[Tuple[int, ...], ...], n: int) -> Tuple[Point, ...]:
    """Primitive integer vectors spanning the rational kernel of rows."""
    if not rows:
        return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    basis = []
    for vec in sympy.Matrix(rows).nullspace():
        scale = lcm(*(int(sympy.fraction(v)[1]) for v in vec))
        ints = [int(v * scale) for v in vec]
        common = gcd(*ints)
        ints = [v // common for v in ints]
        basis.append(tuple(ints))
    return tuple(basis)


class WeightOrderSpec(BaseModel):
    """x ≺ y iff (row·x)_rows <lex (row·y)_rows; rows must be invertible."""

    model_config = ConfigDict(frozen=True)

    rows: Tuple[Tuple[int, ...], ...]

    @field_validator("rows")
    @classmethod
    def _invertible(cls, rows):
        n = len(rows)
        if n == 0:
            raise ValueError("weight matrix needs at least one row")
        if any(len(row) != n for row in rows):
            raise ValueError(f"weight matrix must be {n}x{n}")
        if sympy.Matrix(rows).det() == 0:
            raise ValueError(f"weight matrix {rows} is singular")
        return rows

    @classmethod
    def identity(cls, n: int) -> "WeightOrderSpec":
        return cls(rows=tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.rows)

    def check(self, x: Sequence[int]) -> Point:
        if len(x) != self.n:
            raise DimensionError(f"expected {self.n} coordinates, got {len(x)}")
        return tuple(int(v) for v in x)

    def image(self, x: Sequence[int]) -> Point:
        x = self.check(x)
        return tuple(sum(w * v for w, v in zip(row, x)) for row in self.rows)

    def compare(self, x: Sequence[int], y: Sequence[int]) -> Ordering:
        diff = [b - a for a, b in zip(self.image(x), self.image(y))]
        return {1: Ordering.LESS, 0: Ordering.EQUAL, -1: Ordering.GREATER}[lex_sign(diff)]

    def sign(self, x: Sequence[int]) -> int:
        return lex_sign(self.image(x))

    def kernel_basis(self, j: int) -> Tuple[Point, ...]:
        """Basis of H_j: kernel of the first n-j rows."""
        return _kernel_basis(self.rows[: self.n - j], self.n)

    def level(self, x: Sequence[int]) -> int:
        """Smallest j with x ∈ H_j."""
        image = self.image(x)
        for p, v in enumerate(image):
            if v:
                return self.n - p
        return 0

    def least_positive(self) -> Point:
        (e,) = self.kernel_basis(1)
        return e if self.sign(e) > 0 else tuple(-v for v in e)


class FinalSegmentSpec(BaseModel):
    """F = {x ⪰ θ} when closed, {x ≻ θ} when open."""

    model_config = ConfigDict(frozen=True)

    theta: Tuple[int, ...]
    closed: bool = True

    def contains(self, order: WeightOrderSpec, x: Sequence[int]) -> bool:
        s = lex_sign([a - b for a, b in zip(order.image(x), order.image(self.theta))])
        return s >= 0 if self.closed else s > 0

    def attained(self, order: WeightOrderSpec) -> Point:
        """Least element of F."""
        if self.closed:
            return tuple(self.theta)
        e = order.least_positive()
        return tuple(a + b for a, b in zip(self.theta, e))

    def validate_for(self, order: WeightOrderSpec):
        order.check(self.theta)
        s = order.sign(self.theta)
        if self.closed and s <= 0:
            raise ValueError(f"closed threshold {self.theta} must be positive")
        if not self.closed and s < 0:
            raise ValueError(f"open threshold {self.theta} must be non-negative")


# ============================================
# Subgroups
# ============================================


@dataclass(frozen=True)
class Subgroup:
    description: str
    member: Callable[[Point], bool]
    level: Optional[int] = None

    def __contains__(self, x) -> bool:
        return bool(self.member(tuple(x)))

    def __str__(self) -> str:
        return self.description


def lattice_subgroup(order: WeightOrderSpec, j: int) -> Subgroup:
    n = order.n
    constraints = order.rows[: n - j]
    if j == 0:
        description = "{0}"
    elif j == n:
        description = "Z" if n == 1 else f"Z^{n}"
    else:
        description = "span{" + ",".join(format_point(v) for v in order.kernel_basis(j)) + "}"

    def member(x: Point) -> bool:
        return all(sum(w * v for w, v in zip(row, x)) == 0 for row in constraints)

    return Subgroup(description, member, j)


def product_subgroup(parts: Sequence[Tuple[int, Subgroup]]) -> Subgroup:
    """Product of subgroups on consecutive coordinate blocks of the given widths."""
    description = " x ".join(sub.description for _, sub in parts)
    bounds = list(itertools.accumulate([0] + [width for width, _ in parts]))

    def member(x: Point) -> bool:
        return all(
            sub.member(tuple(x[bounds[i] : bounds[i + 1]])) for i, (_, sub) in enumerate(parts)
        )

    return Subgroup(description, member)


def whole(width: int, torsion: Optional[int] = None) -> Subgroup:
    if torsion is not None:
        return Subgroup(f"Z/{torsion}", lambda x: True)
    return Subgroup("Z" if width == 1 else f"Z^{width}", lambda x: True)


def trivial(width: int) -> Subgroup:
    return Subgroup("{0}", lambda x: not any(x))


# ============================================
# Group specs
# ============================================


class GroupOrderSpec(BaseModel):
    """Base class: a group with its strict positive set F."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: str = "group"

    def moduli(self) -> Tuple[Optional[int], ...]:
        raise NotImplementedError

    def in_segment(self, d: Point) -> bool:
        raise NotImplementedError

    def reach(self) -> int:
        """Coordinate size of the witnesses trace checks need near a point."""
        raise NotImplementedError

    def multiple_bound(self) -> int:
        """Multiples 1..bound of an element outside A(G) reach a comparable one."""
        return self.reach() + 1

    def auxiliary_compare(self, x: Point, y: Point) -> Optional[Ordering]:
        """The total order a threshold group of this shape carries, if known."""
        return None

    def has_auxiliary_order(self) -> bool:
        return False

    @property
    def dim(self) -> int:
        return len(self.moduli())

    def zero(self) -> Point:
        return (0,) * self.dim

    def normalize(self, x: Sequence[int]) -> Point:
        if len(x) != self.dim:
            raise DimensionError(f"expected {self.dim} coordinates, got {len(x)}")
        return tuple(int(v) % k if k else int(v) for v, k in zip(x, self.moduli()))

    def add(self, x: Sequence[int], y: Sequence[int]) -> Point:
        return self.normalize([a + b for a, b in zip(self.normalize(x), self.normalize(y))])

    def neg(self, x: Sequence[int]) -> Point:
        return self.normalize([-a for a in self.normalize(x)])

    def sub(self, x: Sequence[int], y: Sequence[int]) -> Point:
        return self.add(x, self.neg(y))

    def strict_matrix(self, points: List[Point]) -> np.ndarray:
        n = len(points)
        lt = np.zeros((n, n), dtype=bool)
        for i, x in enumerate(points):
            for j, y in enumerate(points):
                if i != j:
                    lt[i, j] = self.in_segment(self.sub(y, x))
        return lt


class ZnGroup(GroupOrderSpec):
    kind: str = "zn"
    weights: WeightOrderSpec
    threshold: FinalSegmentSpec

    @model_validator(mode="after")
    def _threshold_positive(self):
        self.threshold.validate_for(self.weights)
        return self

    def moduli(self) -> Tuple[Optional[int], ...]:
        return (None,) * self.weights.n

    def in_segment(self, d: Point) -> bool:
        return self.threshold.contains(self.weights, d)

    def attained_threshold(self) -> Point:
        return self.threshold.attained(self.weights)

    def reach(self) -> int:
        return max(1, max(abs(v) for v in self.attained_threshold()))

    def multiple_bound(self) -> int:
        lead = next(v for v in self.weights.image(self.attained_threshold()) if v)
        return abs(lead) + 1

    def auxiliary_compare(self, x: Point, y: Point) -> Optional[Ordering]:
        return self.weights.compare(x, y)

    def has_auxiliary_order(self) -> bool:
        return True

    def strict_matrix(self, points: List[Point]) -> np.ndarray:
        if not points:
            return np.zeros((0, 0), dtype=bool)
        W = np.array(self.weights.rows, dtype=np.int64)
        img = np.array(points, dtype=np.int64) @ W.T
        t = np.array(self.weights.image(self.threshold.theta), dtype=np.int64)
        diff = img[None, :, :] - img[:, None, :] - t
        s = lex_sign_array(diff)
        lt = s >= 0 if self.threshold.closed else s > 0
        np.fill_diagonal(lt, False)
        return lt


class LexProductGroup(GroupOrderSpec):
    kind: str = "lexprod"
    factor: int
    base: GroupOrderSpec

    @field_validator("factor")
    @classmethod
    def _positive_factor(cls, factor):
        if factor < 1:
            raise ValueError(f"factor size must be at least 1, got {factor}")
        return factor

    def moduli(self) -> Tuple[Optional[int], ...]:
        return (self.factor,) + self.base.moduli()

    def in_segment(self, d: Point) -> bool:
        return self.base.in_segment(tuple(d[1:]))

    def reach(self) -> int:
        return self.base.reach()

    def multiple_bound(self) -> int:
        return self.base.multiple_bound()


class LexSumGroup(GroupOrderSpec):
    kind: str = "lexsum"
    outer: WeightOrderSpec
    inner: GroupOrderSpec

    def moduli(self) -> Tuple[Optional[int], ...]:
        return self.inner.moduli() + (None,) * self.outer.n

    def _split(self, x: Point) -> Tuple[Point, Point]:
        k = self.inner.dim
        return tuple(x[:k]), tuple(x[k:])

    def in_segment(self, d: Point) -> bool:
        g, c = self._split(d)
        s = self.outer.sign(c)
        return s > 0 or (s == 0 and self.inner.in_segment(g))

    def reach(self) -> int:
        return self.inner.reach()

    def multiple_bound(self) -> int:
        return self.inner.multiple_bound()

    def auxiliary_compare(self, x: Point, y: Point) -> Optional[Ordering]:
        gx, cx = self._split(x)
        gy, cy = self._split(y)
        outer = self.outer.compare(cx, cy)
        if outer is not Ordering.EQUAL:
            return outer
        return self.inner.auxiliary_compare(gx, gy)

    def has_auxiliary_order(self) -> bool:
        return self.inner.has_auxiliary_order()


class OdotGroup(GroupOrderSpec):
    kind: str = "odot"
    a_order: WeightOrderSpec
    segment: FinalSegmentSpec
    base: GroupOrderSpec
    alpha: Tuple[int, ...]

    @model_validator(mode="after")
    def _alpha_attained(self):
        self.a_order.check(self.segment.theta)
        if self.a_order.sign(self.segment.theta) < 0:
            raise ValueError(f"segment threshold {self.segment.theta} must be non-negative")
        if not isinstance(self.base, ZnGroup):
            raise ValueError("odot needs a ZnGroup base with an attained threshold")
        if tuple(self.alpha) != self.base.attained_threshold():
            raise ValueError(
                f"alpha {self.alpha} is not the attained threshold "
                f"{self.base.attained_threshold()} of the base group"
            )
        return self

    def moduli(self) -> Tuple[Optional[int], ...]:
        return (None,) * self.a_order.n + self.base.moduli()

    def _split(self, x: Point) -> Tuple[Point, Point]:
        k = self.a_order.n
        return tuple(x[:k]), tuple(x[k:])

    def in_segment(self, d: Point) -> bool:
        a, b = self._split(d)
        shifted = tuple(u - v for u, v in zip(b, self.alpha))
        weights = self.base.weights
        if weights.sign(shifted) > 0:
            return True
        return not any(shifted) and self.segment.contains(self.a_order, a)

    def reach(self) -> int:
        own = max(1, max(abs(v) for v in self.segment.attained(self.a_order)))
        return max(own, self.base.reach())

    def multiple_bound(self) -> int:
        return self.base.multiple_bound()

    def auxiliary_compare(self, x: Point, y: Point) -> Optional[Ordering]:
        ax, bx = self._split(x)
        ay, by = self._split(y)
        first = self.base.auxiliary_compare(bx, by)
        if first is not Ordering.EQUAL:
            return first
        return self.a_order.compare(ax, ay)

    def has_auxiliary_order(self) -> bool:
        return True


class ConeGroup(GroupOrderSpec):
    """ℤ^a × ℤ/k... with an explicit membership test for the positive cone."""

    kind: str = "cone"
    name: str
    torsion: Tuple[Optional[int], ...]
    member: Callable[[Point], bool]
    reach_hint: int = 3

    def moduli(self) -> Tuple[Optional[int], ...]:
        return self.torsion

    def in_segment(self, d: Point) -> bool:
        return any(d) and bool(self.member(tuple(d)))

    def reach(self) -> int:
        return self.reach_hint


# ============================================
# Windows
# ============================================


class Window(BaseModel):
    """Box of points, bounds inclusive per coordinate."""

    model_config = ConfigDict(frozen=True)

    bounds: Tuple[Tuple[int, int], ...]

    @field_validator("bounds")
    @classmethod
    def _contains_zero(cls, bounds):
        if not bounds:
            raise ValueError("window needs at least one coordinate")
        for lo, hi in bounds:
            if not lo <= 0 <= hi:
                raise ValueError(f"window bound {lo}..{hi} must contain 0")
        return bounds

    @classmethod
    def cube(cls, dim: int, radius: int) -> "Window":
        return cls(bounds=((-radius, radius),) * dim)

    @classmethod
    def for_group(cls, spec: GroupOrderSpec, radius: int) -> "Window":
        return cls(
            bounds=tuple((0, k - 1) if k else (-radius, radius) for k in spec.moduli())
        )

    @property
    def dim(self) -> int:
        return len(self.bounds)

    def size(self) -> int:
        total = 1
        for lo, hi in self.bounds:
            total *= hi - lo + 1
        return total

    def points(self) -> List[Point]:
        return [tuple(p) for p in itertools.product(*(range(lo, hi + 1) for lo, hi in self.bounds))]

    def contains(self, x: Sequence[int]) -> bool:
        return len(x) == self.dim and all(lo <= v <= hi for v, (lo, hi) in zip(x, self.bounds))

    def is_interior(self, x: Sequence[int], margin: int, moduli: Sequence[Optional[int]]) -> bool:
        """At distance >= margin from the boundary on every free coordinate."""
        return all(
            k is not None or lo + margin <= v <= hi - margin
            for v, (lo, hi), k in zip(x, self.bounds, moduli)
        )

    def grow(self, margin: int, moduli: Sequence[Optional[int]]) -> "Window":
        return Window(
            bounds=tuple(
                (lo, hi) if k else (lo - margin, hi + margin)
                for (lo, hi), k in zip(self.bounds, moduli)
            )
        )

    def __str__(self) -> str:
        return " x ".join(f"{lo}..{hi}" for lo, hi in self.bounds)
