"""Exact construction and measure certification of piecewise-monotone
curves in the unit cube whose points pairwise agree in exactly one
coordinate.

The library is organized bottom-up: exact rational interval arithmetic,
ordered partitions and cover sums, singular functions and staircase
machinery, curve construction and the pairwise-coordinate checker,
two-sided Hausdorff-measure certification, the combinatorial set-family
search, independent oracles, and randomized property suites.
"""

from .exact import (
    DigitString,
    Interval,
    IntervalUnion,
    decimal_str,
    expand_digits,
    format_rational,
    measure,
    parse_rational,
    set_ops,
)
from .partitions import (
    CoverSum,
    DomainMismatchError,
    LRPartition,
    RefinementBoundError,
    cover_sum,
    diam_sum,
    greedy_partition,
    is_left_right_ordered,
    refine,
)
from .singular import (
    Affine,
    Cantor,
    Composition,
    ConstructionError,
    DyadicGrid,
    IntervalStaircase,
    MapperResult,
    MonotoneFn,
    NestedIntervalTree,
    NotEvaluableError,
    PiecewiseLinear,
    Restriction,
    RieszNagy,
    RieszNagyImageGrid,
    WeightedSum,
    build_full_measure_mapper,
    build_interval_staircase,
    build_staircase_tree,
    dyadic_increment,
    enumerate_rational_intervals,
    eval_cantor,
    eval_riesz_nagy,
    identity_fn,
    image_measure,
    riesz_nagy_inverse,
)
from .curves import (
    CurveSpec,
    DbeReport,
    ExtremalCurve,
    build_extremal_curve,
    check_dbe_property,
    curve_from_json,
    curve_to_json,
    project,
    projection_image,
    sample,
    shared_coordinate,
)
from .hausdorff import (
    BoxCount,
    FlatSteepSplit,
    H1Certificate,
    LipschitzWitnessError,
    box_count,
    box_count_slope,
    certify_h1,
    check_derivative_bound,
    check_lipschitz_image,
    check_sum_image_bound,
    flat_steep_split,
    polyline_length,
    sqrt_enclosure,
    upper_bound_h1,
)
from .setfamily import (
    SetFamily,
    max_family_size,
    near_pencil,
    unique_intersection,
)

__version__ = "0.1.0"

__all__ = [
    "Affine",
    "BoxCount",
    "Cantor",
    "Composition",
    "ConstructionError",
    "CoverSum",
    "CurveSpec",
    "DbeReport",
    "DigitString",
    "DomainMismatchError",
    "DyadicGrid",
    "ExtremalCurve",
    "FlatSteepSplit",
    "H1Certificate",
    "Interval",
    "IntervalStaircase",
    "IntervalUnion",
    "LRPartition",
    "LipschitzWitnessError",
    "MapperResult",
    "MonotoneFn",
    "NestedIntervalTree",
    "NotEvaluableError",
    "PiecewiseLinear",
    "RefinementBoundError",
    "Restriction",
    "RieszNagy",
    "RieszNagyImageGrid",
    "SetFamily",
    "WeightedSum",
    "box_count",
    "box_count_slope",
    "build_extremal_curve",
    "build_full_measure_mapper",
    "build_interval_staircase",
    "build_staircase_tree",
    "certify_h1",
    "check_dbe_property",
    "check_derivative_bound",
    "check_lipschitz_image",
    "check_sum_image_bound",
    "cover_sum",
    "curve_from_json",
    "curve_to_json",
    "decimal_str",
    "diam_sum",
    "dyadic_increment",
    "enumerate_rational_intervals",
    "eval_cantor",
    "eval_riesz_nagy",
    "expand_digits",
    "flat_steep_split",
    "format_rational",
    "greedy_partition",
    "identity_fn",
    "image_measure",
    "is_left_right_ordered",
    "max_family_size",
    "measure",
    "near_pencil",
    "parse_rational",
    "polyline_length",
    "project",
    "projection_image",
    "refine",
    "riesz_nagy_inverse",
    "sample",
    "set_ops",
    "shared_coordinate",
    "sqrt_enclosure",
    "unique_intersection",
    "upper_bound_h1",
]
