"""Monotone singular functions and staircase constructions.

Four families of machinery live here:

* exact evaluators for the Cantor function and the Riesz-Nagy functions R_a,
* composable monotone-function descriptors (affine, piecewise linear,
  weighted sums, compositions) with exact rational evaluation,
* nested-interval staircase trees: given an interval I, an excluded set and
  a depth d, build a small union N of 2^d subintervals avoiding the excluded
  set together with a continuous non-decreasing f_I that maps N onto [0,1],
* truncated full-measure mappers: strictly increasing f on [0,1] and a union
  N_trunc with measure(f(N_trunc)) >= 1 - 2^-M, assembled from staircases
  over the first M intervals of a fixed rational-interval enumeration.

Everything evaluates in exact rational arithmetic or raises; no floats.
"""

from __future__ import annotations

import itertools
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    DigitString,
    Interval,
    IntervalUnion,
    ONE,
    ZERO,
    format_rational,
    parse_rational,
)


class NotEvaluableError(ValueError):
    """Exact evaluation is not possible at the requested point."""


class ConstructionError(RuntimeError):
    """A staircase or mapper construction ran out of admissible intervals."""


_HALF = Fraction(1, 2)

# Guard against pathological ternary periods.  Unreachable for the rationals
# this library produces: a digit 1 or the cycle shows up long before.
_CANTOR_STEP_CAP = 2_000_000


def _is_dyadic(x: Fraction) -> bool:
    d = x.denominator
    return d & (d - 1) == 0


def eval_cantor(x) -> Fraction:
    """Exact value of the Cantor function at a rational x in [0,1].

    Walks the canonical ternary expansion: the first digit 1 terminates with
    a dyadic value; an all-{0,2} rational tail is eventually periodic and the
    cycle is detected exactly, giving a value with denominator
    (2^L - 1) * 2^P for preperiod P and period L.
    """
    x = Fraction(x)
    if not (ZERO <= x <= ONE):
        raise NotEvaluableError("eval_cantor needs x in [0,1]")
    if x == ONE:
        return ONE
    num, den = x.numerator, x.denominator
    # remainders are purely periodic once the powers of 3 in den are used up
    pre = 0
    d3 = den
    while d3 % 3 == 0:
        d3 //= 3
        pre += 1
    bits = 0  # binary digits accumulated so far, as an integer
    i = 0
    anchor = anchor_i = anchor_bits = None
    while True:
        if num == 0:
            return Fraction(bits, 1 << i)
        if anchor is None:
            if i == pre:
                anchor, anchor_i, anchor_bits = num, i, bits
        elif num == anchor:
            period = i - anchor_i
            cycle = bits - (anchor_bits << period)
            tail = Fraction(cycle, (1 << period) - 1)
            return (anchor_bits + tail) / (1 << anchor_i)
        if i > _CANTOR_STEP_CAP:
            raise RuntimeError("ternary period beyond step cap")
        num *= 3
        dgt, num = divmod(num, den)
        i += 1
        if dgt == 1:
            return Fraction((bits << 1) | 1, 1 << i)
        bits = (bits << 1) | (dgt >> 1)


def eval_riesz_nagy(a, x) -> Fraction:
    """Exact R_a at a dyadic rational x via the halving recursion.

    R(x) = a*R(2x) on [0,1/2] and R(x) = a + (1-a)*R(2x-1) on [1/2,1].
    Non-dyadic x has no finite recursion and raises NotEvaluableError.
    """
    a = Fraction(a)
    x = Fraction(x)
    if not (ZERO < a < ONE):
        raise ValueError("need 0 < a < 1")
    if not (ZERO <= x <= ONE):
        raise NotEvaluableError("eval_riesz_nagy needs x in [0,1]")
    if not _is_dyadic(x):
        raise NotEvaluableError(f"R_a is exactly evaluable only at dyadic x, got {x}")
    off = ZERO
    scale = ONE
    while x != ZERO and x != ONE:
        if x <= _HALF:
            scale *= a
            x = 2 * x
        else:
            off += scale * a
            scale *= ONE - a
            x = 2 * x - ONE
    if x == ONE:
        off += scale
    return off


def dyadic_increment(a, prefix) -> Fraction:
    """Increase of R_a over the dyadic cell addressed by a 0/1 prefix.

    Equals a^(#zeros) * (1-a)^(#ones); the empty prefix gives 1.
    """
    a = Fraction(a)
    if isinstance(prefix, DigitString):
        if prefix.base != 2:
            raise ValueError("prefix must be a base-2 digit string")
        prefix = prefix.digits
    zeros = ones = 0
    for d in prefix:
        if d == 0:
            zeros += 1
        elif d == 1:
            ones += 1
        else:
            raise ValueError("prefix digits must be 0 or 1")
    return a**zeros * (ONE - a) ** ones


def riesz_nagy_inverse(a, y, max_steps: int = 4096) -> Fraction:
    """Exact R_a^{-1}(y) for y in the R_a image of the dyadic rationals.

    Runs the recursion backwards, emitting one binary digit of x per step;
    y off the dyadic image never reaches 0 and raises NotEvaluableError
    after max_steps.
    """
    a = Fraction(a)
    y = Fraction(y)
    if not (ZERO < a < ONE):
        raise ValueError("need 0 < a < 1")
    if not (ZERO <= y <= ONE):
        raise NotEvaluableError("riesz_nagy_inverse needs y in [0,1]")
    if y == ZERO or y == ONE:
        return y
    x_num = 0
    steps = 0
    while y != ZERO:
        if steps >= max_steps:
            raise NotEvaluableError(f"{y} is not an R_a value of a dyadic rational")
        x_num <<= 1
        if y < a:
            y = y / a
        else:
            y = (y - a) / (ONE - a)
            x_num |= 1
        steps += 1
    return Fraction(x_num, 1 << steps)


# -- monotone function descriptors -------------------------------------------


class MonotoneFn:
    """Base descriptor: exact evaluation plus direction/strictness flags."""

    increasing: bool = True
    strictly_monotone: bool = False
    kind: str = "abstract"

    def __call__(self, x) -> Fraction:
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    def __repr__(self) -> str:
        return f"<{type(self).__name__}>"


class Cantor(MonotoneFn):
    """The devil's staircase c on [0,1]: non-decreasing, not injective."""

    kind = "cantor"

    def __call__(self, x) -> Fraction:
        return eval_cantor(x)

    def to_json(self) -> dict:
        return {"kind": self.kind}

    def __eq__(self, other):
        return isinstance(other, Cantor)

    def __hash__(self):
        return hash(self.kind)


class RieszNagy(MonotoneFn):
    """R_a: strictly increasing singular function, exact at dyadics."""

    kind = "riesz_nagy"
    strictly_monotone = True

    def __init__(self, a):
        self.a = Fraction(a)
        if not (ZERO < self.a < ONE):
            raise ValueError("need 0 < a < 1")

    def __call__(self, x) -> Fraction:
        return eval_riesz_nagy(self.a, x)

    def to_json(self) -> dict:
        return {"kind": self.kind, "a": format_rational(self.a)}

    def __eq__(self, other):
        return isinstance(other, RieszNagy) and self.a == other.a

    def __hash__(self):
        return hash((self.kind, self.a))

    def __repr__(self) -> str:
        return f"RieszNagy({self.a})"


class Affine(MonotoneFn):
    kind = "affine"

    def __init__(self, slope, offset):
        self.slope = Fraction(slope)
        self.offset = Fraction(offset)
        self.increasing = self.slope >= 0
        self.strictly_monotone = self.slope != 0

    def __call__(self, x) -> Fraction:
        return self.slope * Fraction(x) + self.offset

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "slope": format_rational(self.slope),
            "offset": format_rational(self.offset),
        }

    def __repr__(self) -> str:
        return f"Affine({self.slope}, {self.offset})"


def identity_fn() -> Affine:
    return Affine(1, 0)


class PiecewiseLinear(MonotoneFn):
    """Non-decreasing piecewise-linear interpolant through rational knots."""

    kind = "piecewise_linear"

    def __init__(self, knots):
        knots = tuple((Fraction(x), Fraction(y)) for x, y in knots)
        if len(knots) < 2:
            raise ValueError("need at least two knots")
        xs = [k[0] for k in knots]
        ys = [k[1] for k in knots]
        if any(x1 >= x2 for x1, x2 in zip(xs, xs[1:])):
            raise ValueError("knot x-values must be strictly increasing")
        if any(y1 > y2 for y1, y2 in zip(ys, ys[1:])):
            raise ValueError("knot y-values must be non-decreasing")
        self.knots = knots
        self._xs = xs
        self.strictly_monotone = all(y1 < y2 for y1, y2 in zip(ys, ys[1:]))

    @property
    def domain(self) -> Interval:
        return Interval(self._xs[0], self._xs[-1])

    def pieces(self):
        """Yield (Interval, slope) per linear piece."""
        for (x1, y1), (x2, y2) in zip(self.knots, self.knots[1:]):
            yield Interval(x1, x2), (y2 - y1) / (x2 - x1)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if not (self._xs[0] <= x <= self._xs[-1]):
            raise NotEvaluableError(f"{x} outside piecewise-linear domain")
        i = bisect_right(self._xs, x) - 1
        if i == len(self._xs) - 1:
            return self.knots[-1][1]
        (x1, y1), (x2, y2) = self.knots[i], self.knots[i + 1]
        return y1 + (y2 - y1) * (x - x1) / (x2 - x1)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "knots": [[format_rational(x), format_rational(y)] for x, y in self.knots],
        }


class WeightedSum(MonotoneFn):
    """Positive-weight sum of non-decreasing terms, weights summing to <= 1."""

    kind = "weighted_sum"

    def __init__(self, terms, weights):
        self.terms = tuple(terms)
        self.weights = tuple(Fraction(w) for w in weights)
        if len(self.terms) != len(self.weights):
            raise ValueError("terms/weights length mismatch")
        if any(w <= 0 for w in self.weights):
            raise ValueError("weights must be positive")
        if sum(self.weights, ZERO) > ONE:
            raise ValueError("weights must sum to at most 1")
        if not all(t.increasing for t in self.terms):
            raise ValueError("weighted sum terms must be non-decreasing")
        self.strictly_monotone = any(t.strictly_monotone for t in self.terms)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        return sum((w * t(x) for t, w in zip(self.terms, self.weights)), ZERO)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "weights": [format_rational(w) for w in self.weights],
            "terms": [t.to_json() for t in self.terms],
        }


class Composition(MonotoneFn):
    kind = "composition"

    def __init__(self, outer, inner):
        self.outer = outer
        self.inner = inner
        self.increasing = outer.increasing == inner.increasing
        self.strictly_monotone = outer.strictly_monotone and inner.strictly_monotone

    def __call__(self, x) -> Fraction:
        return self.outer(self.inner(x))

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "outer": self.outer.to_json(),
            "inner": self.inner.to_json(),
        }

    def __repr__(self) -> str:
        return f"Composition({self.outer!r}, {self.inner!r})"


class Restriction(MonotoneFn):
    """A function together with an explicit domain; evaluation outside raises."""

    kind = "restriction"

    def __init__(self, fn, domain):
        if isinstance(domain, Interval):
            domain = IntervalUnion((domain,))
        self.fn = fn
        self.domain = domain
        self.increasing = fn.increasing
        self.strictly_monotone = fn.strictly_monotone

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if not self.domain.contains(x):
            raise NotEvaluableError(f"{x} outside restriction domain")
        return self.fn(x)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "fn": self.fn.to_json(),
            "domain": self.domain.to_json(),
        }


# -- grids supplying staircase cells ------------------------------------------


class DyadicGrid:
    """Cells [k*2^-g, (k+1)*2^-g]; the default staircase cell source."""

    shrink = _HALF  # max cell-width ratio per extra generation

    def point(self, k: int, g: int) -> Fraction:
        return Fraction(k, 1 << g)

    def cell(self, k: int, g: int) -> Interval:
        return Interval(self.point(k, g), self.point(k + 1, g))

    def max_width(self, g: int) -> Fraction:
        return Fraction(1, 1 << g)

    def index_at_or_after(self, x, g: int) -> int:
        # smallest k with point(k, g) >= x
        n = Fraction(x) * (1 << g)
        return -((-n.numerator) // n.denominator)

    def preimage_cell(self, k: int, g: int) -> Interval:
        return self.cell(k, g)

    def to_json(self) -> dict:
        return {"kind": "dyadic"}

    def __eq__(self, other):
        return isinstance(other, DyadicGrid)

    def __hash__(self):
        return hash("dyadic")


class RieszNagyImageGrid:
    """Cells [R_a(k*2^-g), R_a((k+1)*2^-g)]: the R_a image of the dyadic grid.

    Staircases built on this grid keep every endpoint inside the dyadic
    image of R_a, so preimages under R_a stay exactly computable.
    """

    def __init__(self, a):
        self.a = Fraction(a)
        if not (ZERO < self.a < ONE) or self.a == _HALF:
            raise ValueError("need 0 < a < 1, a != 1/2")
        self._cache: dict[tuple[int, int], Fraction] = {}

    @property
    def shrink(self) -> Fraction:
        return max(self.a, ONE - self.a)

    def point(self, k: int, g: int) -> Fraction:
        # normalize the address so cache hits survive generation changes
        while g > 0 and k % 2 == 0:
            k //= 2
            g -= 1
        key = (k, g)
        v = self._cache.get(key)
        if v is None:
            v = eval_riesz_nagy(self.a, Fraction(k, 1 << g))
            self._cache[key] = v
        return v

    def cell(self, k: int, g: int) -> Interval:
        return Interval(self.point(k, g), self.point(k + 1, g))

    def max_width(self, g: int) -> Fraction:
        return self.shrink**g

    def index_at_or_after(self, x, g: int) -> int:
        x = Fraction(x)
        if self.point(0, g) >= x:
            return 0
        lo, hi = 0, 1 << g
        # invariant: point(lo) < x <= point(hi)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if self.point(mid, g) >= x:
                hi = mid
            else:
                lo = mid
        return hi

    def preimage_cell(self, k: int, g: int) -> Interval:
        return Interval(Fraction(k, 1 << g), Fraction(k + 1, 1 << g))

    def to_json(self) -> dict:
        return {"kind": "riesz_nagy_image", "a": format_rational(self.a)}

    def __eq__(self, other):
        return isinstance(other, RieszNagyImageGrid) and self.a == other.a

    def __hash__(self):
        return hash(("riesz_nagy_image", self.a))


def grid_from_json(obj: dict):
    if obj["kind"] == "dyadic":
        return DyadicGrid()
    if obj["kind"] == "riesz_nagy_image":
        return RieszNagyImageGrid(parse_rational(obj["a"]))
    raise ValueError(f"unknown grid kind {obj['kind']!r}")


# -- nested interval trees -----------------------------------------------------


@dataclass(frozen=True)
class StairCell:
    """A tree node: grid address (k, g) plus its realized interval."""

    k: int
    g: int
    iv: Interval


class NestedIntervalTree:
    """Binary tree of nested grid cells under an interval I.

    Level n holds 2^n cells, left to right.  Each pair of children lies
    inside its parent with a gap between them, cells at level n have width
    at most 1/((n+1)*2^n), and every cell at level >= 1 avoids the excluded
    set declared at construction (the root itself is allowed to meet it).
    """

    def __init__(self, root: Interval, levels, grid, excluded: IntervalUnion):
        self.root = root
        self.levels = [list(lv) for lv in levels]
        self.grid = grid
        self.excluded = excluded

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    def leaves(self) -> list[StairCell]:
        return self.levels[-1]

    def level_union(self, n: int) -> IntervalUnion:
        return IntervalUnion(c.iv for c in self.levels[n])

    def validate(self) -> None:
        """Recheck the nesting, separation, width and avoidance conditions."""
        if len(self.levels[0]) != 1:
            raise AssertionError("level 0 must hold exactly the root")
        for n, level in enumerate(self.levels):
            if n == 0:
                continue
            if len(level) != 2 * len(self.levels[n - 1]):
                raise AssertionError(f"level {n} has wrong cell count")
            bound = Fraction(1, (n + 1) * (1 << n))
            for idx, cell in enumerate(level):
                parent = self.levels[n - 1][idx // 2]
                if not (parent.iv.lo <= cell.iv.lo and cell.iv.hi <= parent.iv.hi):
                    raise AssertionError(f"cell {n}:{idx} escapes its parent")
                if cell.iv.diam > bound:
                    raise AssertionError(f"cell {n}:{idx} too wide")
                if IntervalUnion((cell.iv,)).intersects(self.excluded):
                    raise AssertionError(f"cell {n}:{idx} meets the excluded set")
            for left, right in zip(level, level[1:]):
                if not left.iv.hi < right.iv.lo:
                    raise AssertionError(f"level {n} cells not separated")

    def to_json(self) -> dict:
        return {
            "root": [format_rational(self.root.lo), format_rational(self.root.hi)],
            "grid": self.grid.to_json(),
            "levels": [
                [[format_rational(c.iv.lo), format_rational(c.iv.hi)] for c in level]
                for level in self.levels
            ],
            "addresses": [[[c.k, c.g] for c in level] for level in self.levels],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "NestedIntervalTree":
        grid = grid_from_json(obj["grid"])
        root = Interval(parse_rational(obj["root"][0]), parse_rational(obj["root"][1]))
        levels = []
        for eps, adrs in zip(obj["levels"], obj["addresses"]):
            levels.append(
                [
                    StairCell(k, g, Interval(parse_rational(lo), parse_rational(hi)))
                    for (lo, hi), (k, g) in zip(eps, adrs)
                ]
            )
        return cls(root, levels, grid, IntervalUnion.empty())


_RETRY_GENERATIONS = 64


def _find_children(grid, parent, root_iv: Interval, width_bound: Fraction,
                   excluded: IntervalUnion):
    """Pick the two leftmost separated admissible cells under one parent.

    `parent` is a StairCell, or None for the (non-grid-aligned) root.
    Admissible: inside the parent, width <= width_bound, disjoint from
    excluded.  The sibling must start at least two grid steps after the
    first cell so the two are separated by a gap.  If a generation has no
    admissible pair the search retries one generation finer, up to a cap.
    """
    if parent is None:
        lo_bound, hi_bound = root_iv.lo, root_iv.hi
        target = min(width_bound, root_iv.diam / 8)
        g0 = 0
        while grid.max_width(g0) > target:
            g0 += 1
    else:
        lo_bound, hi_bound = parent.iv.lo, parent.iv.hi
        extra = 0
        w = parent.iv.diam
        while w > width_bound:
            w *= grid.shrink
            extra += 1
        g0 = parent.g + max(extra, 2)

    for attempt in range(_RETRY_GENERATIONS + 1):
        g = g0 + attempt
        if parent is None:
            k = grid.index_at_or_after(lo_bound, g)
            k_end = 1 << g
        else:
            shift = g - parent.g
            k = parent.k << shift
            k_end = (parent.k + 1) << shift
        first = None
        while k < k_end:
            cell = grid.cell(k, g)
            if cell.hi > hi_bound:
                break
            if cell.diam > width_bound:
                k += 1
                continue
            hit = excluded.intersect(IntervalUnion((cell,)))
            if not hit.is_empty:
                k = max(k + 1, grid.index_at_or_after(hit.components[-1].hi, g))
                continue
            if first is None:
                first = StairCell(k, g, cell)
                k += 2  # leave at least a one-cell gap before the sibling
            else:
                return first, StairCell(k, g, cell)
        # no pair at this generation; try finer cells
    raise ConstructionError(
        f"no admissible pair of subintervals in [{lo_bound},{hi_bound}] "
        f"under width {width_bound}"
    )


def build_staircase_tree(I: Interval, excluded: IntervalUnion, depth: int,
                         grid=None, leaf_cap=None) -> NestedIntervalTree:
    """Grow the nested-cell tree behind build_interval_staircase."""
    if grid is None:
        grid = DyadicGrid()
    if I.is_empty or not I.lo_closed or not I.hi_closed or I.lo == I.hi:
        raise ValueError("I must be a nondegenerate closed interval")
    if excluded.measure() >= I.diam:
        raise ConstructionError("excluded set leaves no room inside I")
    root = StairCell(-1, 0, I)
    levels: list[list[StairCell]] = [[root]]
    for n in range(1, depth + 1):
        bound = Fraction(1, (n + 1) * (1 << n))
        if n == depth and leaf_cap is not None:
            bound = min(bound, Fraction(leaf_cap))
        nxt: list[StairCell] = []
        for cell in levels[-1]:
            parent = None if cell.k < 0 else cell
            left, right = _find_children(grid, parent, I, bound, excluded)
            nxt.extend((left, right))
        levels.append(nxt)
    return NestedIntervalTree(I, levels, grid, excluded)


def _cantor_cover_addresses(depth: int) -> list[Fraction]:
    """Left endpoints of the 2^depth level-`depth` Cantor cover intervals."""
    out = []
    for bitstring in itertools.product((0, 1), repeat=depth):
        acc = ZERO
        p = ONE
        for b in bitstring:
            p /= 3
            acc += 2 * b * p
        out.append(acc)
    return out


class IntervalStaircase(MonotoneFn):
    """c composed with the piecewise-linear cell-to-Cantor-cover map.

    Continuous and non-decreasing on [0,1]: 0 left of the tree's root
    interval, 1 right of it, and inside the root it climbs from 0 to 1 while
    staying constant on every gap between leaf cells (each gap lands inside
    one removed middle third, where c is flat).  The leaf union N therefore
    maps onto [0,1]: its image keeps measure 1 at every finite depth.
    """

    kind = "interval_staircase"

    def __init__(self, tree: NestedIntervalTree):
        self.tree = tree
        d = tree.depth
        addrs = _cantor_cover_addresses(d)
        width = Fraction(1, 3**d)
        knots: list[tuple[Fraction, Fraction]] = []

        def push(x, y):
            if knots and knots[-1][0] == x:
                if knots[-1][1] != y:
                    raise AssertionError("inconsistent staircase knot")
                return
            knots.append((x, y))

        push(tree.root.lo, ZERO)
        for cell, t in zip(tree.leaves(), addrs):
            push(cell.iv.lo, t)
            push(cell.iv.hi, t + width)
        push(tree.root.hi, ONE)
        self.phi = PiecewiseLinear(knots)

    @property
    def support(self) -> Interval:
        return self.tree.root

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        if x <= self.tree.root.lo:
            return ZERO
        if x >= self.tree.root.hi:
            return ONE
        return eval_cantor(self.phi(x))

    def to_json(self) -> dict:
        return {"kind": self.kind, "tree": self.tree.to_json()}


def build_interval_staircase(I: Interval, excluded: IntervalUnion, depth: int,
                             grid=None, leaf_cap=None):
    """Return (N, f_I): the leaf-cell union and its staircase function.

    N is the union of the 2^depth leaf cells (measure <= 1/(depth+1)), every
    cell at level >= 1 avoids `excluded`, and f_I is continuous non-decreasing
    with f_I = 0 left of I, 1 right of I, and image of N equal to [0,1].
    """
    tree = build_staircase_tree(I, excluded, depth, grid=grid, leaf_cap=leaf_cap)
    f = IntervalStaircase(tree)
    return tree.level_union(tree.depth), f


# -- truncated full-measure mappers -------------------------------------------


def enumerate_rational_intervals():
    """Yield [p,q] in [0,1] ordered by largest denominator, then by (lo, hi).

    The first few: [0,1], [0,1/2], [1/2,1], [0,1/3], [0,2/3], [1/3,1/2], ...
    """
    b = 1
    while True:
        points = sorted(
            {Fraction(p, q) for q in range(1, b + 1) for p in range(q + 1)}
        )
        fresh = [
            (lo, hi)
            for i, lo in enumerate(points)
            for hi in points[i + 1:]
            if max(lo.denominator, hi.denominator) == b
        ]
        fresh.sort()
        for lo, hi in fresh:
            yield Interval(lo, hi)
        b += 1


@dataclass(frozen=True)
class MapperResult:
    """Strictly increasing f with measure(f(N_trunc)) >= 1 - 2^-level."""

    f: MonotoneFn
    n_trunc: IntervalUnion
    level: int
    image_lower_bound: Fraction
    stair_unions: tuple[IntervalUnion, ...]


def image_measure(f: MonotoneFn, u: IntervalUnion) -> Fraction:
    """Measure of f(u) for monotone f: summed endpoint differences."""
    total = ZERO
    for comp in u.components:
        total += abs(f(comp.hi) - f(comp.lo))
    return total


def build_full_measure_mapper(excluded: IntervalUnion, M: int,
                              staircase_depth: int = 3, grid=None) -> MapperResult:
    """Truncate the full-measure construction at M staircase terms.

    Walks the fixed interval enumeration I_0, I_1, ...; inside each I_m a
    depth-`staircase_depth` staircase is built avoiding `excluded` and every
    earlier N, with leaf cells capped small enough that all N's together
    stay well below the room available in later intervals.  The result is
    f = sum 2^-(m+1) g_m + 2^-M id, strictly increasing with f(0)=0, f(1)=1,
    and the exact image bound measure(f(N_trunc)) >= 1 - 2^-M.
    """
    if M < 1:
        raise ValueError("M must be >= 1")
    avoid = excluded
    stairs = []
    unions: list[IntervalUnion] = []
    gen = enumerate_rational_intervals()
    for m in range(M):
        I_m = next(gen)
        cap = Fraction(1, 1 << (m + 6 + staircase_depth))
        try:
            N_m, g_m = build_interval_staircase(
                I_m, avoid, staircase_depth, grid=grid, leaf_cap=cap
            )
        except ConstructionError as e:
            raise ConstructionError(f"mapper term {m} failed inside {I_m}: {e}") from e
        stairs.append(g_m)
        unions.append(N_m)
        avoid = avoid.union(N_m)
    n_trunc = IntervalUnion.empty()
    for u in unions:
        n_trunc = n_trunc.union(u)
    weights = [Fraction(1, 1 << (m + 1)) for m in range(M)]
    tail = Fraction(1, 1 << M)
    f = WeightedSum(stairs + [identity_fn()], weights + [tail])
    bound = ONE - tail
    got = image_measure(f, n_trunc)
    if got < bound:
        raise AssertionError(f"mapper image measure {got} below bound {bound}")
    return MapperResult(f, n_trunc, M, bound, tuple(unions))


# -- serialization -------------------------------------------------------------


def fn_from_json(obj: dict) -> MonotoneFn:
    kind = obj["kind"]
    if kind == "cantor":
        return Cantor()
    if kind == "riesz_nagy":
        return RieszNagy(parse_rational(obj["a"]))
    if kind == "affine":
        return Affine(parse_rational(obj["slope"]), parse_rational(obj["offset"]))
    if kind == "piecewise_linear":
        return PiecewiseLinear(
            (parse_rational(x), parse_rational(y)) for x, y in obj["knots"]
        )
    if kind == "interval_staircase":
        return IntervalStaircase(NestedIntervalTree.from_json(obj["tree"]))
    if kind == "weighted_sum":
        return WeightedSum(
            [fn_from_json(t) for t in obj["terms"]],
            [parse_rational(w) for w in obj["weights"]],
        )
    if kind == "composition":
        return Composition(fn_from_json(obj["outer"]), fn_from_json(obj["inner"]))
    if kind == "restriction":
        return Restriction(
            fn_from_json(obj["fn"]), IntervalUnion.from_json(obj["domain"])
        )
    raise ValueError(f"unknown function kind {kind!r}")
