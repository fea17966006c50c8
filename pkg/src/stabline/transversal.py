"""Families of vertical segments and the existence of a common transversal.

Segment ``i`` of a family joins ``A_i = (x_i, a_i)`` to ``B_i = (x_i, b_i)``
with ``a_i <= b_i``; abscissas strictly increase along the family.

Two lines drive everything here. ``r`` is the line ``A_s B_t`` of least
slope among all lines ``A_i B_j`` with ``i < j``; ``p`` is the line
``B_u A_v`` of greatest slope among all lines ``B_i A_j`` with ``i < j``.
A transversal exists iff ``r`` stabs every segment, iff ``p`` does, and
then ``r`` and ``p`` are the transversals of greatest and least slope.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .dual import Line, line_through
from .exceptions import DuplicateAbscissa, InvertedBounds, TooFew
from .geometry import Point, RationalLike, as_rational, phi


@dataclass(frozen=True)
class Segment:
    x: Fraction
    a: Fraction
    b: Fraction

    def __post_init__(self):
        if self.a > self.b:
            raise InvertedBounds(f"segment at x={self.x} has a={self.a} > b={self.b}")

    @classmethod
    def of(cls, x: RationalLike, a: RationalLike, b: RationalLike) -> "Segment":
        return cls(as_rational(x), as_rational(a), as_rational(b))

    @property
    def lower(self) -> Point:
        return Point(self.x, self.a)

    @property
    def upper(self) -> Point:
        return Point(self.x, self.b)

    def is_stabbed_by(self, m: Line) -> bool:
        return self.a <= m.k * self.x + m.l <= self.b


@dataclass(frozen=True)
class SegmentFamily:
    segments: Tuple[Segment, ...]

    def __post_init__(self):
        segs = tuple(self.segments)
        object.__setattr__(self, "segments", segs)
        if len(segs) < 2:
            raise TooFew(f"need at least 2 segments, got {len(segs)}")
        for i in range(len(segs) - 1):
            if not segs[i].x < segs[i + 1].x:
                raise DuplicateAbscissa(
                    f"abscissas must strictly increase (segments {i + 1} and {i + 2})",
                    (i, i + 1),
                )

    def __len__(self) -> int:
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def __getitem__(self, i):
        return self.segments[i]

    @property
    def lowers(self) -> List[Point]:
        return [s.lower for s in self.segments]

    @property
    def uppers(self) -> List[Point]:
        return [s.upper for s in self.segments]

    def as_tuples(self) -> List[Tuple[Fraction, Fraction, Fraction]]:
        return [(s.x, s.a, s.b) for s in self.segments]


def validate_family(raw: Iterable[Sequence[RationalLike]]) -> SegmentFamily:
    """Build a family from ``(x, a, b)`` triples given in any order.

    Raises ``TooFew``, ``InvertedBounds`` or ``DuplicateAbscissa``; indices in
    error messages are 1-based positions in the input.
    """
    items = []
    for pos, triple in enumerate(raw):
        if len(triple) != 3:
            raise ValueError(f"segment {pos + 1} must be an (x, a, b) triple")
        x, a, b = (as_rational(v) for v in triple)
        if a > b:
            raise InvertedBounds(f"segment {pos + 1} has a={a} > b={b}", pos)
        items.append((x, a, b, pos))
    if len(items) < 2:
        raise TooFew(f"need at least 2 segments, got {len(items)}")
    items.sort(key=lambda t: (t[0], t[3]))
    for left, right in zip(items, items[1:]):
        if left[0] == right[0]:
            raise DuplicateAbscissa(
                f"segments {left[3] + 1} and {right[3] + 1} share the abscissa {left[0]}",
                (left[3], right[3]),
            )
    return SegmentFamily(tuple(Segment(x, a, b) for x, a, b, _ in items))


def stabs_all(m: Line, fam: SegmentFamily) -> bool:
    k, l = m
    return all(s.a <= k * s.x + l <= s.b for s in fam.segments)


def violated_triples(fam: SegmentFamily):
    """Yield every ``(i, j, k)``, 0-based and lexicographic, breaking the sign test.

    The test for ``i < j < k`` is ``phi(A_i, B_j, A_k) <= 0 <= phi(B_i, A_j, B_k)``.
    """
    A, B = fam.lowers, fam.uppers
    for i, j, k in itertools.combinations(range(len(fam)), 3):
        if phi(A[i], B[j], A[k]) > 0 or phi(B[i], A[j], B[k]) < 0:
            yield i, j, k


def first_violated_triple(fam: SegmentFamily) -> Optional[Tuple[int, int, int]]:
    return next(violated_triples(fam), None)


def condition_ii(fam: SegmentFamily) -> bool:
    """Sign condition on all endpoint triples; vacuously true for two segments."""
    return first_violated_triple(fam) is None


def _extremal(fam: SegmentFamily, first: List[Point], second: List[Point], want_min: bool) -> Line:
    best = None
    best_pair = None
    n = len(fam)
    for i in range(n):
        for j in range(i + 1, n):
            p, q = first[i], second[j]
            k = (q[1] - p[1]) / (q[0] - p[0])
            # strict comparison keeps the lexicographically smallest pair on ties
            if best is None or (k < best if want_min else k > best):
                best, best_pair = k, (p, q)
    return line_through(*best_pair)


def extremal_max_line(fam: SegmentFamily) -> Line:
    """Line ``r``: least slope among lines ``A_i B_j`` with ``i < j``."""
    return _extremal(fam, fam.lowers, fam.uppers, want_min=True)


def extremal_min_line(fam: SegmentFamily) -> Line:
    """Line ``p``: greatest slope among lines ``B_i A_j`` with ``i < j``."""
    return _extremal(fam, fam.uppers, fam.lowers, want_min=False)


def exists_transversal(fam: SegmentFamily) -> bool:
    return stabs_all(extremal_max_line(fam), fam)


@dataclass(frozen=True)
class NoTransversal:
    name = "none"


@dataclass(frozen=True)
class Unique:
    line: Line
    name = "unique"


@dataclass(frozen=True)
class Infinite:
    max_slope: Line
    min_slope: Line
    name = "infinite"


TransversalClass = Union[NoTransversal, Unique, Infinite]


def classify(fam: SegmentFamily) -> TransversalClass:
    r = extremal_max_line(fam)
    if not stabs_all(r, fam):
        return NoTransversal()
    p = extremal_min_line(fam)
    if r == p:
        return Unique(r)
    return Infinite(r, p)
