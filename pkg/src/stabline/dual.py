"""Point-line duality between non-vertical lines and points of the (k, l) plane.

A primal line ``y = k*x + l`` is identified with the dual point ``(k, l)``.
The lines through a fixed primal point form a straight line in the dual
plane, and the lines crossing a vertical segment form a strip between two
parallel dual lines.
"""
from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Tuple

from .geometry import Point, RationalLike, as_rational


class Line(NamedTuple):
    """The primal line ``y = k*x + l``, equivalently the dual point ``(k, l)``."""

    k: Fraction
    l: Fraction

    @classmethod
    def of(cls, k: RationalLike, l: RationalLike) -> "Line":
        return cls(as_rational(k), as_rational(l))

    def at(self, x: RationalLike) -> Fraction:
        return self.k * as_rational(x) + self.l

    def passes_through(self, p: Point) -> bool:
        return self.k * p[0] + self.l == p[1]

    def __str__(self) -> str:
        return f"y = {self.k}*x + {self.l}"


def line_through(p: Point, q: Point) -> Line:
    """The non-vertical line through two points with distinct abscissas."""
    dx = q[0] - p[0]
    if dx == 0:
        raise ValueError(f"points {p} and {q} define a vertical line")
    k = (q[1] - p[1]) / dx
    return Line(k, p[1] - k * p[0])


def dual_midpoint(m1: Line, m2: Line) -> Line:
    return Line((m1.k + m2.k) / 2, (m1.l + m2.l) / 2)


class DualLine(NamedTuple):
    """The dual line ``l = slope*k + intercept``."""

    slope: Fraction
    intercept: Fraction

    def contains(self, m: Line) -> bool:
        return m.l == self.slope * m.k + self.intercept


class VerticalDualLine(NamedTuple):
    """The dual line ``k = c``: every primal line of slope ``c``."""

    k: Fraction

    def contains(self, m: Line) -> bool:
        return m.k == self.k


class DualStrip(NamedTuple):
    """Dual points ``(k, l)`` with ``low - k*x0 <= l <= high - k*x0``.

    These are exactly the lines crossing the vertical segment at ``x0``
    between ordinates ``low`` and ``high``.
    """

    x0: Fraction
    low: Fraction
    high: Fraction

    def contains(self, m: Line) -> bool:
        y = m.k * self.x0 + m.l
        return self.low <= y <= self.high

    def boundaries(self) -> Tuple[DualLine, DualLine]:
        return DualLine(-self.x0, self.low), DualLine(-self.x0, self.high)


def pencil_dual(p: Point) -> DualLine:
    """Dual image of all non-vertical lines through ``p``."""
    return DualLine(-p[0], p[1])


def constant_slope_pencil_dual(c: RationalLike) -> VerticalDualLine:
    """Dual image of all lines ``y = c*x + l``."""
    return VerticalDualLine(as_rational(c))


def segment_strip(x0: RationalLike, a: RationalLike, b: RationalLike) -> DualStrip:
    x0, a, b = as_rational(x0), as_rational(a), as_rational(b)
    if a > b:
        raise ValueError(f"lower bound {a} exceeds upper bound {b}")
    return DualStrip(x0, a, b)


class Parallelogram(NamedTuple):
    """Dual region of all lines crossing two vertical segments.

    The corners are the lines joining the endpoints ``A, B`` of the first
    segment with the endpoints ``C, D`` of the second.
    """

    ac: Line
    ad: Line
    bc: Line
    bd: Line
    centroid: Line

    @property
    def vertices(self) -> Tuple[Line, Line, Line, Line]:
        # boundary order: ac -> ad -> bd -> bc
        return self.ac, self.ad, self.bd, self.bc


def two_segment_parallelogram(s1, s2) -> Parallelogram:
    """Corners and centre of the strip intersection of two segments.

    ``s1`` and ``s2`` are ``(x, low, high)`` triples with distinct ``x``.
    The centre is the line through both segment midpoints.
    """
    x0, a, b = (as_rational(v) for v in s1)
    x1, e, f = (as_rational(v) for v in s2)
    if x0 == x1:
        raise ValueError("segments share the abscissa {}".format(x0))
    if a > b or e > f:
        raise ValueError("segment bounds are inverted")
    A, B, C, D = Point(x0, a), Point(x0, b), Point(x1, e), Point(x1, f)
    mid = line_through(Point(x0, (a + b) / 2), Point(x1, (e + f) / 2))
    return Parallelogram(
        line_through(A, C), line_through(A, D),
        line_through(B, C), line_through(B, D), mid,
    )
