"""Left-right ordered partitions and delta-fine cover sums.

A partition here is a finite family of pairwise-disjoint nonempty interval
unions.  It is "left-right ordered" when any two blocks are separated:
one block lies entirely to the left of the other (sup of one <= inf of the
other).  Refining two such partitions of the same set never increases the
total block diameter; `refine` checks that inequality exactly on every call.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import Interval, IntervalUnion, ZERO


class DomainMismatchError(ValueError):
    """Raised when two partitions do not cover the same underlying set."""


class RefinementBoundError(AssertionError):
    """Raised if a refinement's diameter sum exceeded an input's (never expected)."""


@dataclass(frozen=True)
class LRPartition:
    """Finite partition of an interval union into disjoint blocks."""

    blocks: tuple[IntervalUnion, ...]

    def __init__(self, blocks):
        blocks = tuple(blocks)
        if not blocks:
            raise ValueError("partition needs at least one block")
        for b in blocks:
            if not isinstance(b, IntervalUnion):
                raise TypeError("blocks must be IntervalUnions")
            if b.is_empty:
                raise ValueError("empty block in partition")
        for i in range(len(blocks)):
            for j in range(i + 1, len(blocks)):
                if blocks[i].intersects(blocks[j]):
                    raise ValueError("partition blocks overlap")
        object.__setattr__(self, "blocks", blocks)

    def support(self) -> IntervalUnion:
        out = IntervalUnion.empty()
        for b in self.blocks:
            out = out.union(b)
        return out

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def to_json(self) -> list:
        return [b.to_json() for b in self.blocks]

    @classmethod
    def from_json(cls, obj: list) -> "LRPartition":
        return cls(IntervalUnion.from_json(b) for b in obj)


def is_left_right_ordered(p: LRPartition) -> bool:
    """True iff every pair of blocks is separated (sup of one <= inf of other)."""
    ordered = sorted(p.blocks, key=lambda b: (b.inf, b.sup))
    return all(
        ordered[i].sup <= ordered[i + 1].inf for i in range(len(ordered) - 1)
    )


def diam_sum(p: LRPartition) -> Fraction:
    """Sum of block diameters (sup - inf per block, not measure)."""
    return sum((b.diam for b in p.blocks), ZERO)


def refine(p: LRPartition, q: LRPartition) -> LRPartition:
    """All nonempty pairwise intersections of blocks, ordered left to right.

    Requires p and q to partition the same set.  The refinement's diameter
    sum can never exceed either input's; that inequality is checked exactly
    here and a failure raises RefinementBoundError.
    """
    if p.support() != q.support():
        raise DomainMismatchError("partitions cover different sets")
    blocks = []
    for v in p.blocks:
        for w in q.blocks:
            piece = v.intersect(w)
            if not piece.is_empty:
                blocks.append(piece)
    blocks.sort(key=lambda b: (b.inf, b.sup))
    result = LRPartition(blocks)
    bound = min(diam_sum(p), diam_sum(q))
    if diam_sum(result) > bound:
        raise RefinementBoundError(
            f"refinement diameter sum {diam_sum(result)} exceeds {bound}"
        )
    return result


def greedy_partition(u: IntervalUnion, delta) -> LRPartition:
    """Chop each component of u left to right into pieces of diameter <= delta."""
    delta = Fraction(delta)
    if delta <= 0:
        raise ValueError("delta must be positive")
    blocks = []
    for comp in u.components:
        lo = comp.lo
        lo_closed = comp.lo_closed
        while comp.hi - lo > delta:
            blocks.append(
                IntervalUnion((Interval(lo, lo + delta, lo_closed, False),))
            )
            lo = lo + delta
            lo_closed = True
        blocks.append(
            IntervalUnion((Interval(lo, comp.hi, lo_closed, comp.hi_closed),))
        )
    return LRPartition(blocks)


@dataclass(frozen=True)
class CoverSum:
    """A delta-fine cover's total diameter: an upper bound for H^1_delta."""

    value: Fraction
    delta: Fraction
    block_count: int


def cover_sum(p: LRPartition, delta=None) -> CoverSum:
    """Wrap a partition as a cover sum, checking every block fits under delta."""
    diams = [b.diam for b in p.blocks]
    if delta is None:
        delta = max(diams)
    delta = Fraction(delta)
    if any(d > delta for d in diams):
        raise ValueError("block diameter exceeds delta")
    return CoverSum(sum(diams, ZERO), delta, len(p.blocks))
