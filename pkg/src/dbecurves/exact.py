"""Exact rational interval arithmetic.

Everything in this module is computed over `fractions.Fraction`; no floats
enter or leave.  Intervals carry open/closed flags on each endpoint so that
set subtraction is exact: ``[0,1] - [1/4,3/4]`` really is ``[0,1/4) u (3/4,1]``.

The endpoint bookkeeping uses "cuts": a cut is a pair ``(value, side)`` with
``side`` in ``{-1, 0, +1}`` meaning just-below / at / just-above the value.
Cuts compare lexicographically, which turns all the open/closed case analysis
into ordinary comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(s: str) -> Fraction:
    """Parse 'p/q' (or a plain integer string 'p') into a Fraction."""
    return Fraction(s.strip())


def format_rational(x: Fraction) -> str:
    """Format a Fraction as 'p/q', always including the denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x: Fraction) -> str:
    """Exact decimal string for a Fraction whose denominator is 2^a * 5^b.

    Values produced by the dyadic sqrt enclosures always qualify.  Raises
    ValueError for denominators with other prime factors rather than round.
    """
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(f"{x} has no terminating decimal expansion")
    digits = max(twos, fives)
    scaled = num * 10 ** digits // x.denominator
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    if digits == 0:
        return f"{sign}{scaled}"
    text = str(scaled).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


# -- cuts ------------------------------------------------------------------

_BELOW, _AT, _ABOVE = -1, 0, 1

Cut = tuple[Fraction, int]


def _start_cut(iv: "Interval") -> Cut:
    return (iv.lo, _AT if iv.lo_closed else _ABOVE)


def _end_cut(iv: "Interval") -> Cut:
    return (iv.hi, _AT if iv.hi_closed else _BELOW)


def _pred(c: Cut) -> Cut:
    """The cut immediately before c (used when removing a left endpoint)."""
    v, s = c
    if s == _ABOVE:
        return (v, _AT)
    if s == _AT:
        return (v, _BELOW)
    raise ValueError("no predecessor below an open lower cut")


def _succ(c: Cut) -> Cut:
    v, s = c
    if s == _BELOW:
        return (v, _AT)
    if s == _AT:
        return (v, _ABOVE)
    raise ValueError("no successor above an open upper cut")


def _gap_between(end: Cut, start: Cut) -> bool:
    """True if there is room between an end cut and the next start cut.

    Touching counts as no gap: [0,1/2) followed by [1/2,1] merges, while
    [0,1/2) followed by (1/2,1] leaves the single point 1/2 out.
    """
    if end[0] != start[0]:
        return end[0] < start[0]
    return end[1] == _BELOW and start[1] == _ABOVE


@dataclass(frozen=True)
class Interval:
    """A single interval with rational endpoints and open/closed flags."""

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval endpoints out of order: {self}")

    @classmethod
    def closed(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi))

    @classmethod
    def open(cls, lo, hi) -> "Interval":
        return cls(Fraction(lo), Fraction(hi), False, False)

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(Fraction(x), Fraction(x))

    @classmethod
    def _from_cuts(cls, start: Cut, end: Cut) -> "Interval":
        return cls(start[0], end[0], start[1] == _AT, end[1] == _AT)

    @property
    def is_empty(self) -> bool:
        return _start_cut(self) > _end_cut(self)

    @property
    def diam(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        x = Fraction(x)
        return _start_cut(self) <= (x, _AT) <= _end_cut(self)

    def intersect(self, other: "Interval") -> "Interval | None":
        start = max(_start_cut(self), _start_cut(other))
        end = min(_end_cut(self), _end_cut(other))
        if start > end:
            return None
        return Interval._from_cuts(start, end)

    def __str__(self) -> str:
        left = "[" if self.lo_closed else "("
        right = "]" if self.hi_closed else ")"
        return f"{left}{self.lo},{self.hi}{right}"

    def to_json(self) -> dict:
        return {
            "lo": format_rational(self.lo),
            "hi": format_rational(self.hi),
            "lo_closed": self.lo_closed,
            "hi_closed": self.hi_closed,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Interval":
        return cls(
            parse_rational(obj["lo"]),
            parse_rational(obj["hi"]),
            bool(obj.get("lo_closed", True)),
            bool(obj.get("hi_closed", True)),
        )


def _normalize(intervals: Iterable[Interval]) -> tuple[Interval, ...]:
    """Drop empties, sort, and merge overlapping or touching intervals."""
    items = sorted(
        (iv for iv in intervals if not iv.is_empty),
        key=lambda iv: (_start_cut(iv), _end_cut(iv)),
    )
    out: list[Interval] = []
    for iv in items:
        if out and not _gap_between(_end_cut(out[-1]), _start_cut(iv)):
            last = out[-1]
            if _end_cut(iv) > _end_cut(last):
                out[-1] = Interval._from_cuts(_start_cut(last), _end_cut(iv))
        else:
            out.append(iv)
    return tuple(out)


class IntervalUnion:
    """A finite union of intervals, kept in canonical form.

    Canonical form: components sorted left to right, pairwise disjoint, and
    no two mergeable into one.  All constructors normalize, so two unions
    describing the same point set compare equal.
    """

    __slots__ = ("components",)

    def __init__(self, intervals: Iterable[Interval] = ()):
        object.__setattr__(self, "components", _normalize(intervals))

    def __setattr__(self, name, value):
        raise AttributeError("IntervalUnion is immutable")

    @classmethod
    def empty(cls) -> "IntervalUnion":
        return cls(())

    @classmethod
    def closed(cls, lo, hi) -> "IntervalUnion":
        return cls((Interval.closed(lo, hi),))

    @classmethod
    def point(cls, x) -> "IntervalUnion":
        return cls((Interval.point(x),))

    @property
    def is_empty(self) -> bool:
        return not self.components

    @property
    def inf(self) -> Fraction:
        if self.is_empty:
            raise ValueError("empty union has no inf")
        return self.components[0].lo

    @property
    def sup(self) -> Fraction:
        if self.is_empty:
            raise ValueError("empty union has no sup")
        return self.components[-1].hi

    @property
    def diam(self) -> Fraction:
        """sup - inf (0 for the empty union)."""
        if self.is_empty:
            return ZERO
        return self.sup - self.inf

    def measure(self) -> Fraction:
        """Lebesgue measure: sum of component lengths."""
        return sum((iv.diam for iv in self.components), ZERO)

    def contains(self, x) -> bool:
        x = Fraction(x)
        return any(iv.contains(x) for iv in self.components)

    def union(self, other: "IntervalUnion") -> "IntervalUnion":
        return IntervalUnion(self.components + other.components)

    def intersect(self, other: "IntervalUnion") -> "IntervalUnion":
        out = []
        a, b = self.components, other.components
        i = j = 0
        while i < len(a) and j < len(b):
            piece = a[i].intersect(b[j])
            if piece is not None:
                out.append(piece)
            if _end_cut(a[i]) <= _end_cut(b[j]):
                i += 1
            else:
                j += 1
        return IntervalUnion(out)

    def subtract(self, other: "IntervalUnion") -> "IntervalUnion":
        pieces = list(self.components)
        for j in other.components:
            js, je = _start_cut(j), _end_cut(j)
            nxt: list[Interval] = []
            for p in pieces:
                ps, pe = _start_cut(p), _end_cut(p)
                if je < ps or pe < js:
                    nxt.append(p)
                    continue
                if ps < js:
                    nxt.append(Interval._from_cuts(ps, min(pe, _pred(js))))
                if je < pe:
                    nxt.append(Interval._from_cuts(max(ps, _succ(je)), pe))
            pieces = nxt
        return IntervalUnion(pieces)

    def intersects(self, other: "IntervalUnion") -> bool:
        return not self.intersect(other).is_empty

    def subset_of(self, other: "IntervalUnion") -> bool:
        return self.subtract(other).is_empty

    __or__ = union
    __and__ = intersect
    __sub__ = subtract

    def __eq__(self, other) -> bool:
        return isinstance(other, IntervalUnion) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __iter__(self) -> Iterator[Interval]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __str__(self) -> str:
        if self.is_empty:
            return "{}"
        return " u ".join(str(iv) for iv in self.components)

    def __repr__(self) -> str:
        return f"IntervalUnion({self})"

    def to_json(self) -> list:
        return [iv.to_json() for iv in self.components]

    @classmethod
    def from_json(cls, obj: list) -> "IntervalUnion":
        return cls(Interval.from_json(o) for o in obj)


def measure(u: IntervalUnion) -> Fraction:
    return u.measure()


def set_ops(a: IntervalUnion, b: IntervalUnion, kind: str) -> IntervalUnion:
    """Dispatch union/intersect/subtract by name (CLI and serialization use)."""
    try:
        return {
            "union": a.union,
            "intersect": a.intersect,
            "subtract": a.subtract,
        }[kind](b)
    except KeyError:
        raise ValueError(f"unknown set operation {kind!r}") from None


# -- digit expansions ------------------------------------------------------


@dataclass(frozen=True)
class DigitString:
    """First k digits of x in a given base, most significant first."""

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError("digit out of range")

    def value(self) -> Fraction:
        """The rational whose expansion starts with these digits (trailing zeros)."""
        acc = ZERO
        p = ONE
        for d in self.digits:
            p /= self.base
            acc += d * p
        return acc

    def __iter__(self):
        return iter(self.digits)

    def __len__(self):
        return len(self.digits)


def expand_digits(x, base: int, k: int) -> DigitString:
    """First k base-`base` digits of x in [0,1].

    The terminating expansion is preferred when x has one (1/2 in base 2 is
    ``10...``, not ``01...1``); x = 1 is written as all (base-1) digits.
    """
    x = Fraction(x)
    if not (ZERO <= x <= ONE):
        raise ValueError("expand_digits needs x in [0,1]")
    if x == ONE:
        return DigitString(base, (base - 1,) * k)
    num, den = x.numerator, x.denominator
    digits = []
    for _ in range(k):
        num *= base
        d, num = divmod(num, den)
        digits.append(d)
    return DigitString(base, tuple(digits))
