"""The dual feasibility polygon and the three selected transversals.

All transversals of a family form a bounded convex polygon in the
``(k, l)`` plane. Its vertices are lines through two segment endpoints:
``r``, ``p``, and the lines ``A_i A_j`` and ``B_i B_j`` that stab every
segment. From it we pick

* ``s1``: the dual midpoint of ``r`` and ``p``;
* ``s2``: the mean of the polygon's vertices;
* ``s3``: the area centroid of the polygon.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, NamedTuple, Sequence, Tuple

from .dual import Line, dual_midpoint, line_through
from .exceptions import NoTransversalError
from .geometry import phi
from .transversal import (
    SegmentFamily,
    extremal_max_line,
    extremal_min_line,
    stabs_all,
)


def convex_hull(points: Iterable[Line]) -> List[Line]:
    """Exact monotone-chain hull, counter-clockwise, no collinear vertices.

    Starts at the lexicographically smallest point. Collinear input gives
    its two extreme points; a single point gives itself.
    """
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts

    def half(seq):
        chain = []
        for q in seq:
            while len(chain) >= 2 and phi(chain[-2], chain[-1], q) <= 0:
                chain.pop()
            chain.append(q)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    return hull


@dataclass(frozen=True)
class DualPolygon:
    """Convex region of transversals, vertices counter-clockwise in (k, l)."""

    vertices: Tuple[Line, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def area(self) -> Fraction:
        return polygon_area(self.vertices)

    def bounding_box(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        ks = [v.k for v in self.vertices]
        ls = [v.l for v in self.vertices]
        return min(ks), min(ls), max(ks), max(ls)


def candidate_vertices(fam: SegmentFamily) -> List[Line]:
    """``r``, ``p`` and every stabbing line through two lower or two upper endpoints."""
    r, p = extremal_max_line(fam), extremal_min_line(fam)
    out = [r, p]
    for ends in (fam.lowers, fam.uppers):
        for P, Q in itertools.combinations(ends, 2):
            m = line_through(P, Q)
            if stabs_all(m, fam):
                out.append(m)
    return out


def feasibility_polygon(fam: SegmentFamily) -> DualPolygon:
    r = extremal_max_line(fam)
    if not stabs_all(r, fam):
        return DualPolygon(())
    return DualPolygon(tuple(convex_hull(candidate_vertices(fam))))


def polygon_area(vertices: Sequence[Line]) -> Fraction:
    """Signed shoelace area; positive for counter-clockwise order."""
    m = len(vertices)
    if m < 3:
        return Fraction(0)
    twice = sum(
        vertices[i][0] * vertices[(i + 1) % m][1] - vertices[(i + 1) % m][0] * vertices[i][1]
        for i in range(m)
    )
    return Fraction(twice) / 2


def polygon_centroid(vertices: Sequence[Line]) -> Line:
    """Area centroid; zero-area input falls back to a vertex or a midpoint.

    One vertex gives itself. A collinear chain gives the midpoint of its
    two extreme points.
    """
    m = len(vertices)
    if m == 0:
        raise ValueError("empty polygon has no centroid")
    a2 = Fraction(0)
    ck = Fraction(0)
    cl = Fraction(0)
    for i in range(m):
        (k0, l0), (k1, l1) = vertices[i], vertices[(i + 1) % m]
        cross = k0 * l1 - k1 * l0
        a2 += cross
        ck += (k0 + k1) * cross
        cl += (l0 + l1) * cross
    if a2 == 0:
        lo, hi = min(vertices), max(vertices)
        return dual_midpoint(lo, hi)
    # a2 is twice the area, so 6A = 3*a2
    return Line(ck / (3 * a2), cl / (3 * a2))


def vertex_mean(vertices: Sequence[Line]) -> Line:
    m = len(vertices)
    return Line(sum(v.k for v in vertices) / Fraction(m), sum(v.l for v in vertices) / Fraction(m))


def _require_transversal(fam: SegmentFamily) -> Tuple[Line, Line]:
    r = extremal_max_line(fam)
    if not stabs_all(r, fam):
        raise NoTransversalError("the segments admit no common transversal")
    return r, extremal_min_line(fam)


def select_s1(fam: SegmentFamily) -> Line:
    r, p = _require_transversal(fam)
    return dual_midpoint(r, p)


def select_s2(fam: SegmentFamily) -> Line:
    _require_transversal(fam)
    return vertex_mean(feasibility_polygon(fam).vertices)


def select_s3(fam: SegmentFamily) -> Line:
    _require_transversal(fam)
    return polygon_centroid(feasibility_polygon(fam).vertices)


class SpecialLines(NamedTuple):
    s1: Line
    s2: Line
    s3: Line


SELECTORS = {"s1": select_s1, "s2": select_s2, "s3": select_s3}


def special_lines(fam: SegmentFamily) -> SpecialLines:
    r, p = _require_transversal(fam)
    poly = feasibility_polygon(fam).vertices
    return SpecialLines(dual_midpoint(r, p), vertex_mean(poly), polygon_centroid(poly))
