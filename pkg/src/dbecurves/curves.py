"""Curves in [0,1]^n whose points pairwise share exactly one coordinate.

A curve is the point set {(x, f_1(x), ..., f_{n-2}(x), alpha)} for monotone
components f_i and a fixed last coordinate alpha.  When every component is
strictly increasing, two distinct points can only agree in the alpha slot,
which is the de Bruijn-Erdos property for point pairs.  The extremal builder
realizes the measure-maximizing family: h = R_a in slot 2 and full-measure
mappers composed with h in the later slots, together with the domains
W_j = h^{-1}(N_j) on which those mappers climb fastest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Interval, IntervalUnion, ONE, ZERO, format_rational, parse_rational
from .partitions import LRPartition
from .singular import (
    Composition,
    MapperResult,
    MonotoneFn,
    RieszNagy,
    RieszNagyImageGrid,
    build_full_measure_mapper,
    fn_from_json,
    riesz_nagy_inverse,
)

SCHEMA_VERSION = 1


@dataclass(frozen=True)
class CurveSpec:
    """The point set {(x, f_1(x), ..., f_{n-2}(x), alpha)}."""

    n: int
    components: tuple[MonotoneFn, ...]
    alpha: Fraction
    piece_domains: LRPartition | None = None

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "components", tuple(self.components))
        if self.n < 2:
            raise ValueError("need n >= 2")
        if len(self.components) != self.n - 2:
            raise ValueError(f"n={self.n} needs {self.n - 2} component functions")
        if not (ZERO <= self.alpha <= ONE):
            raise ValueError("alpha must lie in [0,1]")

    def point(self, x) -> tuple[Fraction, ...]:
        x = Fraction(x)
        return (x, *(f(x) for f in self.components), self.alpha)


@dataclass(frozen=True)
class ExtremalCurve:
    """A measure-extremal curve plus the objects its certification uses."""

    spec: CurveSpec
    h: MonotoneFn
    mappers: tuple[MapperResult, ...]
    w_domains: tuple[IntervalUnion, ...]
    q1: IntervalUnion
    a: Fraction
    M: int
    staircase_depth: int

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def alpha(self) -> Fraction:
        return self.spec.alpha

    @property
    def components(self) -> tuple[MonotoneFn, ...]:
        return self.spec.components

    def point(self, x) -> tuple[Fraction, ...]:
        return self.spec.point(x)


def _as_spec(curve) -> CurveSpec:
    return curve.spec if isinstance(curve, ExtremalCurve) else curve


def build_extremal_curve(n: int, a=Fraction(1, 4), M: int = 4,
                         alpha=Fraction(1, 2), staircase_depth: int = 2) -> ExtremalCurve:
    """Build the extremal curve of dimension n >= 3.

    n=3 gives (x, R_a(x), alpha).  For n >= 4 the later components are
    full-measure mappers composed with h = R_a, each built to avoid the
    previous mappers' N sets; the mappers' staircase cells come from the
    R_a image grid so that every W_j = h^{-1}(N_j) is exactly computable.
    """
    a = Fraction(a)
    alpha = Fraction(alpha)
    if n < 3:
        raise ValueError("extremal construction needs n >= 3")
    if not (ZERO < a < ONE) or a == Fraction(1, 2):
        raise ValueError("need 0 < a < 1 with a != 1/2")
    h = RieszNagy(a)
    if n == 3:
        spec = CurveSpec(3, (h,), alpha)
        return ExtremalCurve(spec, h, (), (), IntervalUnion.closed(0, 1), a, M,
                             staircase_depth)
    grid = RieszNagyImageGrid(a)
    avoid = IntervalUnion.empty()
    mappers: list[MapperResult] = []
    for _ in range(n - 3):
        mr = build_full_measure_mapper(avoid, M, staircase_depth, grid=grid)
        mappers.append(mr)
        avoid = avoid.union(mr.n_trunc)
    w_domains = []
    for mr in mappers:
        w_domains.append(
            IntervalUnion(
                Interval(
                    riesz_nagy_inverse(a, comp.lo),
                    riesz_nagy_inverse(a, comp.hi),
                    comp.lo_closed,
                    comp.hi_closed,
                )
                for comp in mr.n_trunc.components
            )
        )
    q1 = IntervalUnion.closed(0, 1)
    for w in w_domains:
        q1 = q1.subtract(w)
    components = (h, *(Composition(mr.f, h) for mr in mappers))
    spec = CurveSpec(n, components, alpha)
    return ExtremalCurve(spec, h, tuple(mappers), tuple(w_domains), q1, a, M,
                         staircase_depth)


def sample(curve, depth: int) -> list[tuple[Fraction, ...]]:
    """The 2^depth + 1 exact curve points at x = k * 2^-depth, sorted by x."""
    spec = _as_spec(curve)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    step = Fraction(1, 1 << depth)
    return [spec.point(k * step) for k in range((1 << depth) + 1)]


@dataclass(frozen=True)
class DbeReport:
    """Outcome of the pairwise unique-shared-coordinate check."""

    ok: bool
    violations: tuple[tuple[int, int, int], ...]  # (i, j, match count)
    pair_count: int


def check_dbe_property(points) -> DbeReport:
    """Check every pair of points agrees in exactly one coordinate."""
    pts = [tuple(Fraction(c) for c in p) for p in points]
    if len(pts) < 2:
        raise ValueError("need at least two points")
    if len(set(pts)) != len(pts):
        raise ValueError("duplicate points are not a valid curve sample")
    dims = {len(p) for p in pts}
    if len(dims) != 1:
        raise ValueError("points of mixed dimension")
    violations = []
    for i in range(len(pts)):
        p = pts[i]
        for j in range(i + 1, len(pts)):
            q = pts[j]
            matches = sum(1 for c1, c2 in zip(p, q) if c1 == c2)
            if matches != 1:
                violations.append((i, j, matches))
    pair_count = len(pts) * (len(pts) - 1) // 2
    return DbeReport(not violations, tuple(violations), pair_count)


def project(points, i: int) -> list[Fraction]:
    """The i-th coordinates (1-indexed) of a point list."""
    if not points:
        return []
    n = len(points[0])
    if not (1 <= i <= n):
        raise ValueError(f"coordinate index {i} out of range 1..{n}")
    return [p[i - 1] for p in points]


def projection_image(curve, i: int, domain: IntervalUnion) -> IntervalUnion:
    """Exact image of a domain under the i-th coordinate map (1-indexed)."""
    spec = _as_spec(curve)
    if not (1 <= i <= spec.n):
        raise ValueError(f"coordinate index {i} out of range 1..{spec.n}")
    if i == 1:
        return domain
    if i == spec.n:
        return IntervalUnion.point(spec.alpha)
    f = spec.components[i - 2]
    images = []
    for comp in domain.components:
        ylo, yhi = f(comp.lo), f(comp.hi)
        if f.increasing:
            images.append(Interval(ylo, yhi, comp.lo_closed, comp.hi_closed))
        else:
            images.append(Interval(yhi, ylo, comp.hi_closed, comp.lo_closed))
    return IntervalUnion(images)


def shared_coordinate(points) -> int | None:
    """The 1-indexed coordinate all points share, or None.

    Valid pairwise-unique-match point sets in the plane always lie on one
    axis-parallel line, so for n=2 samples this returns the line's axis.
    """
    if not points:
        return None
    first = points[0]
    for c in range(len(first)):
        if all(p[c] == first[c] for p in points):
            return c + 1
    return None


# -- serialization -------------------------------------------------------------


def curve_to_json(curve) -> dict:
    if isinstance(curve, ExtremalCurve):
        return {
            "schema_version": SCHEMA_VERSION,
            "type": "extremal_curve",
            "n": curve.n,
            "a": format_rational(curve.a),
            "M": curve.M,
            "alpha": format_rational(curve.alpha),
            "staircase_depth": curve.staircase_depth,
            "components": [f.to_json() for f in curve.components],
            "mappers": [
                {
                    "level": mr.level,
                    "image_lower_bound": format_rational(mr.image_lower_bound),
                    "n_trunc": mr.n_trunc.to_json(),
                }
                for mr in curve.mappers
            ],
            "w_domains": [w.to_json() for w in curve.w_domains],
            "q1": curve.q1.to_json(),
        }
    spec = _as_spec(curve)
    out = {
        "schema_version": SCHEMA_VERSION,
        "type": "curve",
        "n": spec.n,
        "alpha": format_rational(spec.alpha),
        "components": [f.to_json() for f in spec.components],
    }
    if spec.piece_domains is not None:
        out["piece_domains"] = spec.piece_domains.to_json()
    return out


def curve_from_json(obj: dict):
    if obj.get("schema_version") != SCHEMA_VERSION:
        raise ValueError("unsupported schema_version")
    components = tuple(fn_from_json(f) for f in obj["components"])
    alpha = parse_rational(obj["alpha"])
    if obj["type"] == "curve":
        domains = obj.get("piece_domains")
        return CurveSpec(
            obj["n"], components, alpha,
            LRPartition.from_json(domains) if domains is not None else None,
        )
    if obj["type"] != "extremal_curve":
        raise ValueError(f"unknown curve type {obj['type']!r}")
    a = parse_rational(obj["a"])
    spec = CurveSpec(obj["n"], components, alpha)
    h = components[0]
    mappers = tuple(
        MapperResult(
            f=components[idx + 1].outer,
            n_trunc=IntervalUnion.from_json(m["n_trunc"]),
            level=m["level"],
            image_lower_bound=parse_rational(m["image_lower_bound"]),
            stair_unions=(),
        )
        for idx, m in enumerate(obj["mappers"])
    )
    return ExtremalCurve(
        spec,
        h,
        mappers,
        tuple(IntervalUnion.from_json(w) for w in obj["w_domains"]),
        IntervalUnion.from_json(obj["q1"]),
        a,
        obj["M"],
        obj["staircase_depth"],
    )
