"""Exact rational points and the orientation determinant.

Every quantity is a :class:`fractions.Fraction`, which keeps numerator and
denominator in lowest terms with a positive denominator after each
operation, so equality is structural and nothing is ever rounded.
"""
from __future__ import annotations

import enum
import numbers
import re
from fractions import Fraction
from typing import NamedTuple, Tuple, Union

from .exceptions import MalformedRational

RationalLike = Union[int, Fraction, str, numbers.Rational]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"n"`` or ``"n/d"`` (``d > 0``) into a canonical Fraction.

    Decimal and exponent notation are rejected on purpose: the wire format
    only carries exact integer ratios.
    """
    if not isinstance(text, str):
        raise MalformedRational(f"expected a rational string, got {text!r}")
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise MalformedRational(f"malformed rational {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise MalformedRational(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Canonical string form, ``"n"`` for integers and ``"n/d"`` otherwise."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions, rational strings and floats to a Fraction.

    Floats are converted exactly (their binary value), never rounded.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coordinates")
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, numbers.Rational):
        return Fraction(int(value.numerator), int(value.denominator))
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Real):
        f = float(value)
        if f != f or f in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite coordinate {value!r}")
        return Fraction(f)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x: RationalLike, y: RationalLike) -> "Point":
        return cls(as_rational(x), as_rational(y))


class Orientation(enum.Enum):
    CLOCKWISE = -1
    COLLINEAR = 0
    COUNTERCLOCKWISE = 1


class RationalRotation(NamedTuple):
    """A rotation whose cosine and sine are rational, e.g. ``(3/5, 4/5)``."""

    cos: Fraction
    sin: Fraction

    @classmethod
    def of(cls, cos: RationalLike, sin: RationalLike) -> "RationalRotation":
        r = cls(as_rational(cos), as_rational(sin))
        if r.cos * r.cos + r.sin * r.sin != 1:
            raise ValueError(f"({r.cos}, {r.sin}) is not on the unit circle")
        return r

    @classmethod
    def from_parameter(cls, t: RationalLike) -> "RationalRotation":
        """Rational point on the unit circle ``((1-t^2)/(1+t^2), 2t/(1+t^2))``.

        The angle grows strictly with ``t``; every rational rotation other
        than the half turn arises this way.
        """
        t = as_rational(t)
        d = 1 + t * t
        return cls((1 - t * t) / d, 2 * t / d)


def phi(a: Point, b: Point, c: Point) -> Fraction:
    """Orientation determinant of three points.

    Equals ``det([[1, 1, 1], [xa, xb, xc], [ya, yb, yc]])``: positive for a
    counter-clockwise turn, zero when collinear.
    """
    return (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1])


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    d = phi(a, b, c)
    if d > 0:
        return Orientation.COUNTERCLOCKWISE
    if d < 0:
        return Orientation.CLOCKWISE
    return Orientation.COLLINEAR


def translate(p: Point, v: Tuple[RationalLike, RationalLike]) -> Point:
    return Point(p[0] + as_rational(v[0]), p[1] + as_rational(v[1]))


def rotate(p: Point, r: RationalRotation) -> Point:
    c, s = as_rational(r[0]), as_rational(r[1])
    if c * c + s * s != 1:
        raise ValueError(f"({c}, {s}) is not on the unit circle")
    return Point(c * p[0] - s * p[1], s * p[0] + c * p[1])
