"""scikit-learn style front end.

>>> reg = TransversalRegressor(selector="s2").fit([[1, 1, 7], [3, 4, 10], [4, 3, 8]])
>>> reg.classification_
'infinite'

``X`` for :meth:`TransversalRegressor.fit` is an ``(n, 3)`` array-like of
``(x, a, b)`` rows. Values stay exact: ints, Fractions and ``"n/d"`` strings
are taken as is, floats by their exact binary value.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError

from .exceptions import NoTransversalError
from .geometry import as_rational
from .selection import SELECTORS, feasibility_polygon, polygon_centroid, vertex_mean
from .dual import dual_midpoint
from .transversal import NoTransversal, SegmentFamily, Unique, classify, validate_family


def check_segments(X) -> SegmentFamily:
    """Validate an ``(n, 3)`` array-like and return the sorted family."""
    if isinstance(X, SegmentFamily):
        return X
    rows = X.tolist() if isinstance(X, np.ndarray) else list(X)
    for i, row in enumerate(rows):
        if isinstance(row, (str, bytes)) or len(row) != 3:
            raise ValueError(f"row {i} of X must have exactly 3 entries (x, a, b)")
    return validate_family(rows)


def check_abscissas(X):
    """Flatten a scalar, 1-D or ``(n, 1)`` input into a list of Fractions."""
    arr = np.asarray(X, dtype=object)
    if arr.ndim == 0:
        arr = arr.reshape(1)
    elif arr.ndim == 2 and arr.shape[1] == 1:
        arr = arr[:, 0]
    elif arr.ndim != 1:
        raise ValueError(f"expected abscissas of shape (n,) or (n, 1), got {arr.shape}")
    return [as_rational(v) for v in arr]


class TransversalRegressor(BaseEstimator):
    """Fit a line crossing every vertical segment of a family.

    Parameters
    ----------
    selector : {"s1", "s2", "s3"}
        Which transversal to return: midpoint of the two extremal lines,
        mean of the feasibility polygon's vertices, or its area centroid.

    Attributes
    ----------
    classification_ : {"none", "unique", "infinite"}
    r_, p_ : Line or None
        Transversals of greatest and least slope.
    polygon_ : DualPolygon
    area_ : Fraction
    line_ : Line or None
        The selected transversal; ``coef_`` and ``intercept_`` are its slope
        and intercept.
    """

    def __init__(self, selector="s3"):
        self.selector = selector

    def fit(self, X, y=None):
        if self.selector not in SELECTORS:
            raise ValueError(f"selector must be one of {sorted(SELECTORS)}, got {self.selector!r}")
        fam = check_segments(X)
        cls = classify(fam)
        self.family_ = fam
        self.n_segments_ = len(fam)
        self.classification_ = cls.name
        self.polygon_ = feasibility_polygon(fam)
        self.area_ = self.polygon_.area()
        if isinstance(cls, NoTransversal):
            self.r_ = self.p_ = self.line_ = None
            self.coef_ = self.intercept_ = None
            return self
        if isinstance(cls, Unique):
            self.r_ = self.p_ = cls.line
        else:
            self.r_, self.p_ = cls.max_slope, cls.min_slope
        verts = self.polygon_.vertices
        if self.selector == "s1":
            self.line_ = dual_midpoint(self.r_, self.p_)
        elif self.selector == "s2":
            self.line_ = vertex_mean(verts)
        else:
            self.line_ = polygon_centroid(verts)
        self.coef_, self.intercept_ = self.line_
        return self

    def _check_line(self):
        if not hasattr(self, "classification_"):
            raise NotFittedError("call fit before using this estimator")
        if self.line_ is None:
            raise NoTransversalError("the fitted segments admit no common transversal")
        return self.line_

    def predict(self, X):
        """Ordinates of the selected line at the given abscissas (object array of Fractions)."""
        k, l = self._check_line()
        return np.array([k * x + l for x in check_abscissas(X)], dtype=object)

    def score(self, X, y=None):
        """Fraction of the segments in ``X`` crossed by the selected line."""
        line = self._check_line()
        fam = check_segments(X)
        hits = sum(s.is_stabbed_by(line) for s in fam.segments)
        return Fraction(hits, len(fam))

    def transform(self, X):
        """Signed vertical gap from each segment to the line, zero when crossed.

        Positive when the line passes above the segment, negative below.
        Rows come back in increasing abscissa order.
        """
        line = self._check_line()
        fam = check_segments(X)
        out = []
        for s in fam.segments:
            y = line.at(s.x)
            out.append(y - s.b if y > s.b else (y - s.a if y < s.a else Fraction(0)))
        return np.array(out, dtype=object)
