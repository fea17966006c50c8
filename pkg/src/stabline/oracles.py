"""Independent cross-checks for the transversal computations.

None of these reuse the extremal-line or hull code paths:

* existence: try every line through two endpoints of distinct segments;
* region: clip a large dual box by the two half-planes of every segment;
* centroid: count points of a uniform rational grid inside the region.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .dual import Line, line_through
from .exceptions import OracleMismatch
from .geometry import as_rational, phi
from .transversal import SegmentFamily, exists_transversal, stabs_all


def endpoint_pair_lines(fam: SegmentFamily):
    ends = [(i, P) for i, s in enumerate(fam.segments) for P in (s.lower, s.upper)]
    for (i, P), (j, Q) in itertools.combinations(ends, 2):
        if i != j:
            yield line_through(P, Q)


def endpoint_pair_witness(fam: SegmentFamily) -> Optional[Line]:
    """A stabbing line through two endpoints, or None if there is none."""
    for m in endpoint_pair_lines(fam):
        if stabs_all(m, fam):
            return m
    return None


def existence_oracle(fam: SegmentFamily) -> bool:
    return endpoint_pair_witness(fam) is not None


# -- half-plane clipping ----------------------------------------------------

def _dual_box(fam: SegmentFamily) -> List[Tuple[Fraction, Fraction]]:
    # any transversal meets two segments, which bounds its slope and then its intercept
    c = max(max(abs(s.a), abs(s.b)) for s in fam.segments)
    xmax = max(abs(s.x) for s in fam.segments)
    gap = min(t.x - s.x for s, t in zip(fam.segments, fam.segments[1:]))
    K = 2 * c / gap + 1
    L = c + K * xmax + 1
    return [(-K, -L), (K, -L), (K, L), (-K, L)]


def _clip(poly, coef_k, coef_l, bound):
    """Keep the part of ``poly`` where ``coef_k*k + coef_l*l <= bound``."""
    out = []
    m = len(poly)
    for i in range(m):
        P, Q = poly[i], poly[(i + 1) % m]
        fp = coef_k * P[0] + coef_l * P[1] - bound
        fq = coef_k * Q[0] + coef_l * Q[1] - bound
        if fp <= 0:
            out.append(P)
        if (fp < 0 < fq) or (fq < 0 < fp):
            t = fp / (fp - fq)
            out.append((P[0] + t * (Q[0] - P[0]), P[1] + t * (Q[1] - P[1])))
    return out


def _simplify(poly) -> List[Line]:
    pts = []
    for P in poly:
        P = Line(*P)
        if not pts or pts[-1] != P:
            pts.append(P)
    while len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    if len(set(pts)) <= 2:
        return sorted(set(pts))
    # an all-collinear ring is a degenerate segment: keep its extremes
    if all(phi(pts[0], pts[1], q) == 0 for q in pts[2:]) and pts[0] != pts[1]:
        return [min(pts), max(pts)]
    changed = True
    while changed and len(pts) > 2:
        changed = False
        for i in range(len(pts)):
            a, b, c = pts[i - 1], pts[i], pts[(i + 1) % len(pts)]
            if b == a or phi(a, b, c) == 0:
                del pts[i]
                changed = True
                break
    return pts


def clipped_region(fam: SegmentFamily) -> List[Line]:
    """Vertices of ``{(k, l): a_i <= k*x_i + l <= b_i}`` by successive clipping."""
    poly = _dual_box(fam)
    for s in fam.segments:
        poly = _clip(poly, s.x, Fraction(1), s.b)
        if not poly:
            return []
        poly = _clip(poly, -s.x, Fraction(-1), -s.a)
        if not poly:
            return []
    return _simplify(poly)


# -- grid sampling ----------------------------------------------------------

@dataclass
class GridEstimate:
    samples: int
    area: Fraction
    centroid: Optional[Line]


def grid_centroid(fam: SegmentFamily, box, resolution) -> GridEstimate:
    """Sample cell centres of a grid with spacing ``resolution`` over ``box``.

    ``box`` is ``(kmin, lmin, kmax, lmax)``. For each column the feasible
    intercepts form an interval, so the samples in it are counted exactly.
    """
    h = as_rational(resolution)
    kmin, lmin, kmax, lmax = (as_rational(v) for v in box)
    cols = max(1, math.ceil((kmax - kmin) / h))
    count = 0
    sum_k = Fraction(0)
    sum_l = Fraction(0)
    for c in range(cols):
        k = kmin + (c + Fraction(1, 2)) * h
        lo = max(s.a - k * s.x for s in fam.segments)
        hi = min(s.b - k * s.x for s in fam.segments)
        lo, hi = max(lo, lmin), min(hi, lmax)
        if lo > hi:
            continue
        # rows are lmin + (j + 1/2) h
        j0 = math.ceil((lo - lmin) / h - Fraction(1, 2))
        j1 = math.floor((hi - lmin) / h - Fraction(1, 2))
        if j1 < j0:
            continue
        n = j1 - j0 + 1
        count += n
        sum_k += n * k
        sum_l += n * lmin + h * (Fraction(j0 + j1, 2) + Fraction(1, 2)) * n
    if count == 0:
        return GridEstimate(0, Fraction(0), None)
    return GridEstimate(count, count * h * h, Line(sum_k / count, sum_l / count))


# -- report -----------------------------------------------------------------

@dataclass
class OracleReport:
    existence: bool
    existence_agrees: bool
    region_agrees: Optional[bool]
    centroid_agrees: Optional[bool]
    grid: Optional[GridEstimate] = None
    tolerance: Optional[Fraction] = None
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.existence_agrees and self.region_agrees is not False and self.centroid_agrees is not False


def oracle_check(fam: SegmentFamily, resolution=Fraction(1, 400), raise_on_mismatch=True) -> OracleReport:
    """Run the three oracles against the main computation.

    The centroid tolerance is ``4 * resolution``.
    """
    from .selection import feasibility_polygon, polygon_centroid

    h = as_rational(resolution)
    expected = exists_transversal(fam)
    found = existence_oracle(fam)
    report = OracleReport(found, found == expected, None, None, tolerance=4 * h)
    if not report.existence_agrees:
        report.notes.append(f"existence: oracle says {found}, extremal line says {expected}")

    poly = feasibility_polygon(fam).vertices
    region = clipped_region(fam)
    report.region_agrees = set(region) == set(poly)
    if not report.region_agrees:
        report.notes.append("region: clipped vertices differ from the hull vertices")

    if poly and len(poly) >= 3:
        est = grid_centroid(fam, _bbox(poly), h)
        report.grid = est
        if est.centroid is None:
            report.notes.append("centroid: no grid samples fell inside the region")
        else:
            exact = polygon_centroid(poly)
            report.centroid_agrees = (
                abs(est.centroid.k - exact.k) <= report.tolerance
                and abs(est.centroid.l - exact.l) <= report.tolerance
            )
            if not report.centroid_agrees:
                report.notes.append(
                    f"centroid: grid {tuple(map(float, est.centroid))} vs exact {tuple(map(float, exact))}"
                )
    elif poly:
        report.notes.append("centroid: region has zero area, grid check skipped")

    if raise_on_mismatch and not report.ok:
        raise OracleMismatch("; ".join(report.notes), instance=fam.as_tuples())
    return report


def _bbox(poly: Sequence[Line]):
    ks = [v.k for v in poly]
    ls = [v.l for v in poly]
    return min(ks), min(ls), max(ks), max(ls)
