"""Instance and result documents.

Instances are JSON objects ``{"name": ..., "segments": [{"x", "a", "b"}, ...]}``
whose numbers are rational strings ``"n"`` or ``"n/d"``. Results use the
same conventions with a fixed key order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .dual import Line, dual_midpoint
from .exceptions import MissingField, ValidationError
from .geometry import format_rational, parse_rational
from .selection import feasibility_polygon, polygon_centroid, vertex_mean
from .transversal import Infinite, NoTransversal, SegmentFamily, classify, first_violated_triple, validate_family

RESULT_KEYS = ("classification", "r", "p", "s1", "s2", "s3", "polygon", "area", "certificate")


@dataclass(frozen=True)
class InstanceDocument:
    segments: Tuple[Tuple[Fraction, Fraction, Fraction], ...]
    name: Optional[str] = None

    @property
    def family(self) -> SegmentFamily:
        return validate_family(self.segments)

    def to_dict(self) -> dict:
        d = {}
        if self.name is not None:
            d["name"] = self.name
        d["segments"] = [
            {"x": format_rational(x), "a": format_rational(a), "b": format_rational(b)}
            for x, a, b in self.segments
        ]
        return d


def parse_instance(text) -> InstanceDocument:
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ValidationError(f"instance is not valid UTF-8: {exc}") from None
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"instance is not valid JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ValidationError("instance must be a JSON object")
    if "segments" not in raw:
        raise MissingField("instance has no 'segments' field")
    if not isinstance(raw["segments"], list):
        raise ValidationError("'segments' must be a list")
    name = raw.get("name")
    if name is not None and not isinstance(name, str):
        raise ValidationError("'name' must be a string")
    segs = []
    for i, entry in enumerate(raw["segments"]):
        if not isinstance(entry, dict):
            raise ValidationError(f"segment {i + 1} must be an object with x, a, b")
        row = []
        for key in ("x", "a", "b"):
            if key not in entry:
                raise MissingField(f"segment {i + 1} has no '{key}' field")
            try:
                row.append(parse_rational(entry[key]))
            except ValidationError as exc:
                raise type(exc)(f"segment {i + 1}, field '{key}': {exc}") from None
        segs.append(tuple(row))
    doc = InstanceDocument(tuple(segs), name)
    doc.family  # surfaces TooFew / InvertedBounds / DuplicateAbscissa
    return doc


def serialize_instance(doc: InstanceDocument) -> str:
    return json.dumps(doc.to_dict(), indent=2) + "\n"


def _line_dict(m: Line) -> Dict[str, str]:
    return {"k": format_rational(m.k), "l": format_rational(m.l)}


@dataclass(frozen=True)
class ResultDocument:
    classification: str
    r: Optional[Line] = None
    p: Optional[Line] = None
    s1: Optional[Line] = None
    s2: Optional[Line] = None
    s3: Optional[Line] = None
    polygon: Optional[Tuple[Line, ...]] = None
    area: Optional[Fraction] = None
    certificate: Optional[Tuple[int, int, int]] = None

    def lines(self) -> Dict[str, Line]:
        return {key: getattr(self, key) for key in ("r", "p", "s1", "s2", "s3") if getattr(self, key) is not None}

    def to_dict(self, keys: Sequence[str] = RESULT_KEYS) -> dict:
        out = {}
        for key in RESULT_KEYS:
            if key not in keys:
                continue
            value = getattr(self, key)
            if key != "classification" and value is None:
                continue
            if isinstance(value, Line):
                value = _line_dict(value)
            elif key == "polygon":
                value = [_line_dict(v) for v in value]
            elif key == "area":
                value = format_rational(value)
            elif key == "certificate":
                value = list(value)
            out[key] = value
        return out

    def to_json(self, keys: Sequence[str] = RESULT_KEYS) -> str:
        return json.dumps(self.to_dict(keys), indent=2) + "\n"

    def to_text(self, keys: Sequence[str] = RESULT_KEYS) -> str:
        d = self.to_dict(keys)
        out = []
        for key, value in d.items():
            if key in ("r", "p", "s1", "s2", "s3"):
                out.append(f"{key}: y = {value['k']}*x + {value['l']}")
            elif key == "polygon":
                pts = ", ".join(f"({v['k']}, {v['l']})" for v in value)
                out.append(f"polygon ({len(value)} vertices): {pts}")
            elif key == "certificate":
                i, j, k = value
                out.append(f"certificate: segments {i}, {j}, {k} admit no common transversal")
            else:
                out.append(f"{key}: {value}")
        return "\n".join(out) + "\n"


def run_report(doc: InstanceDocument, options=None) -> ResultDocument:
    """Classify the instance and compute every defined line.

    ``options`` is accepted for forward compatibility and currently unused;
    callers choose what to display through ``to_dict(keys)``.
    """
    fam = doc.family
    cls = classify(fam)
    if isinstance(cls, NoTransversal):
        triple = first_violated_triple(fam)
        cert = tuple(i + 1 for i in triple) if triple is not None else None
        return ResultDocument("none", certificate=cert)
    if isinstance(cls, Infinite):
        r, p = cls.max_slope, cls.min_slope
    else:
        r = p = cls.line
    poly = feasibility_polygon(fam)
    return ResultDocument(
        cls.name,
        r=r,
        p=p,
        s1=dual_midpoint(r, p),
        s2=vertex_mean(poly.vertices),
        s3=polygon_centroid(poly.vertices),
        polygon=poly.vertices,
        area=poly.area(),
    )
