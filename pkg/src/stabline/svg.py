"""Static SVG drawings of a family and of its dual feasibility polygon.

Geometry is exact up to this point; coordinates are converted to decimals
only when written out.
"""
from __future__ import annotations

from fractions import Fraction
from typing import List, Tuple

from .io import InstanceDocument, ResultDocument

WIDTH = 640
HEIGHT = 480
PAD = 24

STYLE = """\
<style>
  .segment { stroke: #1f4e9c; stroke-width: 3; stroke-linecap: round; }
  .extremal { stroke: #555555; stroke-width: 1.2; stroke-dasharray: 6 4; fill: none; }
  .selector { stroke-width: 1.6; fill: none; }
  .s1 { stroke: #17becf; fill: #17becf; }
  .s2 { stroke: #2ca02c; fill: #2ca02c; }
  .s3 { stroke: #d62728; fill: #d62728; }
  .feasible { fill: #cfe3f5; stroke: #1f4e9c; stroke-width: 1.2; }
  .vertex { fill: #1f4e9c; }
  .axis { stroke: #bbbbbb; stroke-width: 1; }
  text { font-family: sans-serif; font-size: 12px; fill: #333333; }
</style>"""


def _num(v) -> str:
    s = f"{float(v):.3f}".rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


class _Frame:
    """Maps a world box onto the viewBox, y axis pointing up."""

    def __init__(self, xmin, xmax, ymin, ymax):
        if xmax == xmin:
            xmin, xmax = xmin - 1, xmax + 1
        if ymax == ymin:
            ymin, ymax = ymin - 1, ymax + 1
        mx = (xmax - xmin) / 10
        my = (ymax - ymin) / 10
        self.xmin, self.xmax = Fraction(xmin) - mx, Fraction(xmax) + mx
        self.ymin, self.ymax = Fraction(ymin) - my, Fraction(ymax) + my
        self.sx = Fraction(WIDTH - 2 * PAD) / (self.xmax - self.xmin)
        self.sy = Fraction(HEIGHT - 2 * PAD) / (self.ymax - self.ymin)

    def __call__(self, x, y) -> Tuple[str, str]:
        return _num(PAD + (x - self.xmin) * self.sx), _num(PAD + (self.ymax - y) * self.sy)

    def line(self, k, l, cls) -> str:
        x1, y1 = self(self.xmin, k * self.xmin + l)
        x2, y2 = self(self.xmax, k * self.xmax + l)
        return f'<line class="{cls}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>'

    def axes(self) -> List[str]:
        out = []
        if self.ymin <= 0 <= self.ymax:
            a, b = self(self.xmin, 0), self(self.xmax, 0)
            out.append(f'<line class="axis" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
        if self.xmin <= 0 <= self.xmax:
            a, b = self(0, self.ymin), self(0, self.ymax)
            out.append(f'<line class="axis" x1="{a[0]}" y1="{a[1]}" x2="{b[0]}" y2="{b[1]}"/>')
        return out


def _wrap(title: str, body: List[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">'
    )
    return "\n".join([head, f"<title>{title}</title>", STYLE, *body, "</svg>"]) + "\n"


def render_primal(doc: InstanceDocument, result: ResultDocument) -> str:
    segs = doc.family.segments
    frame = _Frame(
        min(s.x for s in segs), max(s.x for s in segs),
        min(s.a for s in segs), max(s.b for s in segs),
    )
    body = frame.axes()
    for s in segs:
        (x1, y1), (x2, y2) = frame(s.x, s.a), frame(s.x, s.b)
        body.append(f'<line class="segment" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    if result.classification != "none":
        for key in ("r", "p"):
            m = getattr(result, key)
            body.append(frame.line(m.k, m.l, f"extremal {key}"))
        for key in ("s1", "s2", "s3"):
            m = getattr(result, key)
            body.append(frame.line(m.k, m.l, f"selector {key}"))
    name = doc.name or "segments"
    return _wrap(f"{name}: primal plane ({result.classification})", body)


def render_dual(doc: InstanceDocument, result: ResultDocument) -> str:
    name = doc.name or "segments"
    title = f"{name}: dual plane ({result.classification})"
    if result.classification == "none" or not result.polygon:
        return _wrap(title, [f'<text x="{PAD}" y="{PAD}">no common transversal</text>'])
    verts = list(result.polygon)
    marks = [result.s1, result.s2, result.s3]
    pts = verts + marks
    frame = _Frame(
        min(v.k for v in pts), max(v.k for v in pts),
        min(v.l for v in pts), max(v.l for v in pts),
    )
    body = frame.axes()
    coords = [frame(v.k, v.l) for v in verts]
    if len(verts) >= 3:
        body.append('<polygon class="feasible" points="{}"/>'.format(" ".join(f"{x},{y}" for x, y in coords)))
    elif len(verts) == 2:
        (x1, y1), (x2, y2) = coords
        body.append(f'<line class="feasible" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>')
    for x, y in coords:
        body.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="3"/>')
    for key, m in zip(("s1", "s2", "s3"), marks):
        x, y = frame(m.k, m.l)
        body.append(f'<circle class="centroid {key}" cx="{x}" cy="{y}" r="4"/>')
        body.append(f'<text class="{key}" x="{x}" y="{y}" dx="6" dy="-6">{key}</text>')
    return _wrap(title, body)


def render_svg(doc: InstanceDocument, result: ResultDocument, mode: str = "primal") -> str:
    if mode == "primal":
        return render_primal(doc, result)
    if mode == "dual":
        return render_dual(doc, result)
    raise ValueError(f"mode must be 'primal' or 'dual', got {mode!r}")
