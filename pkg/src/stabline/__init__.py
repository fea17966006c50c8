"""Exact common transversals of vertical segments via point-line duality."""
from .dual import DualLine, DualStrip, Line, pencil_dual, segment_strip, two_segment_parallelogram
from .estimator import TransversalRegressor
from .exceptions import (
    DuplicateAbscissa,
    InvertedBounds,
    MalformedRational,
    NoTransversalError,
    OracleMismatch,
    TooFew,
    ValidationError,
)
from .geometry import Orientation, Point, RationalRotation, orientation, phi, rotate, translate
from .selection import DualPolygon, SpecialLines, feasibility_polygon, select_s1, select_s2, select_s3, special_lines
from .transversal import (
    Infinite,
    NoTransversal,
    Segment,
    SegmentFamily,
    Unique,
    classify,
    condition_ii,
    exists_transversal,
    extremal_max_line,
    extremal_min_line,
    stabs_all,
    validate_family,
)

__version__ = "0.1.0"
