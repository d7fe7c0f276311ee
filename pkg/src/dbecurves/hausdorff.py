"""Two-sided certification of the 1-dimensional Hausdorff measure of curves.

Upper bounds are exact rationals: the length of [0,1] plus each component's
summed image measures over the declared piece partition.  Lower bounds come
from inscribed polylines whose chord lengths are enclosed by integer-sqrt
directed rounding at a chosen precision, so the reported value carries a
rigorous error radius.  Box counts support dimension estimates, and the
remaining functions check the classical inequalities the bounds lean on
(Lipschitz images, two-function cover sums, derivative bounds) in exact
arithmetic.
"""

from __future__ import annotations

import math
import statistics
from dataclasses import dataclass
from fractions import Fraction

from .curves import sample
from .exact import Interval, IntervalUnion, ONE, ZERO, decimal_str, format_rational
from .singular import (
    Affine,
    MonotoneFn,
    NotEvaluableError,
    PiecewiseLinear,
    RieszNagy,
    image_measure,
)

SCHEMA_VERSION = 1


class LipschitzWitnessError(ValueError):
    """A sampled pair contradicts the declared Lipschitz constant."""

    def __init__(self, x, y, fx, fy, c):
        self.witness = (x, y, fx, fy)
        super().__init__(
            f"|f({x})-f({y})| = {abs(fx - fy)} exceeds {c} * {abs(x - y)}"
        )


def sqrt_enclosure(x, bits: int) -> tuple[Fraction, Fraction]:
    """Dyadic lo <= sqrt(x) <= hi with hi - lo <= 2^-bits (0 when exact)."""
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of a negative value")
    scaled = (x.numerator << (2 * bits)) // x.denominator
    r = math.isqrt(scaled)
    lo = Fraction(r, 1 << bits)
    if lo * lo == x:
        return lo, lo
    return lo, lo + Fraction(1, 1 << bits)


def _spec_of(curve):
    return getattr(curve, "spec", curve)


def upper_bound_h1(curve) -> Fraction:
    """Exact sum of piece lengths plus per-component image measures.

    For a curve with strictly monotone components mapping onto [0,1] this
    telescopes to exactly n-1; it is an upper bound for H^1 of any curve
    with monotone components over the declared pieces.
    """
    spec = _spec_of(curve)
    if spec.piece_domains is None:
        blocks = (IntervalUnion.closed(0, 1),)
    else:
        blocks = spec.piece_domains.blocks
    total = ZERO
    for block in blocks:
        total += block.measure()
        for f in spec.components:
            total += image_measure(f, block)
    return total


def _collapsed_riesz_length(a: Fraction, depth: int, bits: int):
    """O(depth) enclosure of the depth-d polyline length of (x, R_a(x), alpha).

    Cells with the same digit counts share their increment, so the 2^d chords
    collapse into d+1 binomial-weighted terms.
    """
    lo_total = ZERO
    hi_total = ZERO
    dx2 = Fraction(1, 1 << (2 * depth))
    for k in range(depth + 1):
        w = a ** (depth - k) * (ONE - a) ** k
        lo, hi = sqrt_enclosure(dx2 + w * w, bits)
        count = math.comb(depth, k)
        lo_total += count * lo
        hi_total += count * hi
    return lo_total, hi_total


def _is_collapsible(spec) -> bool:
    return len(spec.components) == 1 and isinstance(spec.components[0], RieszNagy)


def polyline_length(curve, depth: int, precision: int = 64):
    """(value, error_radius): certified inscribed-polyline length at a depth.

    The true chord sum lies within error_radius of value; chord square roots
    are enclosed dyadically at `precision` fractional bits and everything
    else is exact, so the bound is rigorous.  Single-R_a curves use the
    collapsed binomial sum; everything else walks the 2^depth sample cells.
    """
    spec = _spec_of(curve)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    # Per-chord enclosures get depth extra bits so that the sum over the
    # 2^depth chords still lands within 2^-precision of the true length.
    bits = precision + depth
    if _is_collapsible(spec):
        lo, hi = _collapsed_riesz_length(spec.components[0].a, depth, bits)
    else:
        pts = sample(spec, depth)
        lo = hi = ZERO
        for p, q in zip(pts, pts[1:]):
            s = sum(((c2 - c1) ** 2 for c1, c2 in zip(p, q)), ZERO)
            slo, shi = sqrt_enclosure(s, bits)
            lo += slo
            hi += shi
    return (lo + hi) / 2, (hi - lo) / 2


def lower_method(curve) -> str:
    return (
        "inscribed-polyline/collapsed-binomial"
        if _is_collapsible(_spec_of(curve))
        else "inscribed-polyline/chord-sum"
    )


@dataclass(frozen=True)
class H1Certificate:
    """Paired exact upper bound and certified polyline lower bound."""

    upper: Fraction
    lower: Fraction
    error_radius: Fraction
    lower_depth: int
    upper_method: str
    lower_method: str

    def __post_init__(self):
        if self.lower - self.error_radius > self.upper:
            raise ValueError("certificate inconsistent: lower bound above upper")

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "upper": format_rational(self.upper),
            "lower": decimal_str(self.lower),
            "error_radius": decimal_str(self.error_radius),
            "depth": self.lower_depth,
            "method": {"upper": self.upper_method, "lower": self.lower_method},
        }


def certify_h1(curve, depth: int, precision: int = 64) -> H1Certificate:
    value, radius = polyline_length(curve, depth, precision)
    return H1Certificate(
        upper=upper_bound_h1(curve),
        lower=value,
        error_radius=radius,
        lower_depth=depth,
        upper_method="partition-image-sum",
        lower_method=lower_method(curve),
    )


# -- box counting ---------------------------------------------------------------


@dataclass(frozen=True)
class BoxCount:
    delta: Fraction
    count: int
    slope_estimate: float | None = None


def _as_points(curve_or_points, m: int, sample_depth: int | None):
    if isinstance(curve_or_points, (list, tuple)):
        return list(curve_or_points)
    depth = max(m + 2, sample_depth or 0)
    return sample(curve_or_points, depth)


def box_count(curve_or_points, m: int, sample_depth: int | None = None) -> BoxCount:
    """Count 2^-m grid boxes hit by a curve sample (or an explicit point list)."""
    pts = _as_points(curve_or_points, m, sample_depth)
    scale = 1 << m
    top = scale - 1
    cells = set()
    for p in pts:
        cells.add(
            tuple(
                min(Fraction(c).numerator * scale // Fraction(c).denominator, top)
                for c in p
            )
        )
    return BoxCount(Fraction(1, scale), len(cells))


def box_count_slope(curve_or_points, ms, sample_depth: int | None = None):
    """(slope, series): least-squares dimension estimate over a range of m."""
    ms = list(ms)
    if len(ms) < 2:
        raise ValueError("need at least two grid resolutions")
    raw = [box_count(curve_or_points, m, sample_depth) for m in ms]
    xs = [m * math.log(2.0) for m in ms]
    ys = [math.log(bc.count) for bc in raw]
    slope = statistics.linear_regression(xs, ys).slope
    series = [BoxCount(bc.delta, bc.count, slope) for bc in raw]
    return slope, series


# -- inequality checkers ----------------------------------------------------------


def check_lipschitz_image(f: MonotoneFn, c, F: IntervalUnion,
                          sample_depth: int = 8) -> bool:
    """Exact check that measure(f(F)) <= c * measure(F).

    The caller declares f to be c-Lipschitz on F; the declaration is probed
    on all pairs of a dyadic sample first and a falsifying pair raises
    LipschitzWitnessError with the witness.
    """
    c = Fraction(c)
    xs = set()
    for comp in F.components:
        xs.add(comp.lo)
        xs.add(comp.hi)
    step = Fraction(1, 1 << sample_depth)
    k = 0
    while k * step <= ONE:
        x = k * step
        if F.contains(x):
            xs.add(x)
        k += 1
    pts = sorted(xs)
    vals = [f(x) for x in pts]
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            if abs(vals[j] - vals[i]) > c * (pts[j] - pts[i]):
                raise LipschitzWitnessError(pts[i], pts[j], vals[i], vals[j], c)
    return image_measure(f, F) <= c * F.measure()


_BISECT_CAP = 200


def _delta_cuts(f: MonotoneFn, comp: Interval, delta: Fraction) -> list[Fraction]:
    """Endpoints of a chop of comp on which f moves by at most delta per piece."""
    cuts = [comp.lo]
    stack = [(comp.lo, comp.hi, 0)]
    out = []
    while stack:
        u, v, d = stack.pop()
        if abs(f(v) - f(u)) <= delta:
            out.append((u, v))
            continue
        if d >= _BISECT_CAP:
            raise NotEvaluableError("could not refine below delta")
        mid = (u + v) / 2
        stack.append(((mid, v, d + 1)))
        stack.append(((u, mid, d + 1)))
    out.sort()
    for u, v in out:
        cuts.append(v)
    return cuts


def check_sum_image_bound(f1: MonotoneFn, f2: MonotoneFn, D: IntervalUnion,
                          delta) -> bool:
    """Exact two-function cover-sum inequality for strictly increasing f1, f2.

    Chops D until each piece moves f1 (resp. f2) by at most delta; the common
    refinement then covers (f1+f2)(D) with blocks of diameter at most 2*delta.
    Checks that the refined 2-delta cover sum never exceeds the sum of the
    two delta cover sums.
    """
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    s1 = s2 = refined = ZERO
    for comp in D.components:
        cuts1 = _delta_cuts(f1, comp, delta)
        cuts2 = _delta_cuts(f2, comp, delta)
        s1 += sum((f1(v) - f1(u) for u, v in zip(cuts1, cuts1[1:])), ZERO)
        s2 += sum((f2(v) - f2(u) for u, v in zip(cuts2, cuts2[1:])), ZERO)
        merged = sorted(set(cuts1) | set(cuts2))
        for u, v in zip(merged, merged[1:]):
            d1 = f1(v) - f1(u)
            d2 = f2(v) - f2(u)
            if d1 > delta or d2 > delta:
                raise AssertionError("refinement failed to be delta-fine")
            refined += d1 + d2
    return refined <= s1 + s2


def _affine_pieces(f) -> list[tuple[Interval, Fraction]]:
    if isinstance(f, PiecewiseLinear):
        return list(f.pieces())
    if isinstance(f, Affine):
        return [(Interval(ZERO, ONE), f.slope)]
    raise TypeError("derivative bound needs a piecewise-affine function")


def check_derivative_bound(f: MonotoneFn, E: IntervalUnion) -> bool:
    """Exact check that measure(f(E)) <= integral of |f'| over E.

    f must be piecewise affine with rational breakpoints, so the integral is
    the finite sum of |slope| * measure(E intersect piece); equality holds
    when every piece has nonzero slope.
    """
    pieces = _affine_pieces(f)
    domain = IntervalUnion(iv for iv, _ in pieces)
    if not E.subset_of(domain):
        raise NotEvaluableError("E escapes the function's piece domain")
    total = ZERO
    for iv, slope in pieces:
        total += abs(slope) * E.intersect(IntervalUnion((iv,))).measure()
    return image_measure(f, E) <= total


# -- non-certifying flat/steep diagnostic ----------------------------------------


@dataclass(frozen=True)
class FlatSteepSplit:
    """Cell classification illustrating the two-part lower-bound heuristic.

    Cells where the second coordinate climbs at most theta times the x-step
    are 'flat' (their x-extent is tallied); the rest are 'steep' (their
    second-coordinate rise is tallied).  Diagnostic only: not a certificate.
    """

    flat_x_measure: Fraction
    steep_rise_measure: Fraction
    flat_cells: int
    steep_cells: int
    theta: Fraction
    depth: int


def flat_steep_split(curve, depth: int, theta=Fraction(1, 256)) -> FlatSteepSplit:
    spec = _spec_of(curve)
    if not spec.components:
        raise ValueError("curve has no monotone component to classify")
    theta = Fraction(theta)
    f = spec.components[0]
    step = Fraction(1, 1 << depth)
    flat_x = steep_rise = ZERO
    flat_cells = steep_cells = 0
    prev = f(ZERO)
    for k in range(1, (1 << depth) + 1):
        cur = f(k * step)
        rise = abs(cur - prev)
        if rise <= theta * step:
            flat_x += step
            flat_cells += 1
        else:
            steep_rise += rise
            steep_cells += 1
        prev = cur
    return FlatSteepSplit(flat_x, steep_rise, flat_cells, steep_cells, theta, depth)
