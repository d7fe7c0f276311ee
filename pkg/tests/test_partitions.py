"""Ordered partitions, common refinements, and delta-fine cover sums."""

from fractions import Fraction

import pytest

from dbecurves.exact import Interval, IntervalUnion
from dbecurves.partitions import (
    CoverSum,
    DomainMismatchError,
    LRPartition,
    cover_sum,
    diam_sum,
    greedy_partition,
    is_left_right_ordered,
    refine,
)

F = Fraction


def _u(*pairs):
    return IntervalUnion(Interval(F(a), F(b)) for a, b in pairs)


def half_open(a, b):
    return IntervalUnion((Interval(F(a), F(b), hi_closed=False),))


def test_partition_validation():
    with pytest.raises(ValueError):
        LRPartition([])
    with pytest.raises(ValueError):
        LRPartition([_u((0, F(1, 2))), _u((F(1, 4), 1))])  # overlap
    p = LRPartition([half_open(0, F(1, 2)), _u((F(1, 2), 1))])
    assert len(p) == 2
    assert p.support() == IntervalUnion.closed(0, 1)


def test_is_left_right_ordered():
    p = LRPartition([half_open(0, F(1, 2)), _u((F(1, 2), 1))])
    assert is_left_right_ordered(p)
    wrap = IntervalUnion((
        Interval(F(0), F(1, 4), hi_closed=False),
        Interval(F(1, 2), F(1), lo_closed=False),
    ))
    q = LRPartition([wrap, _u((F(1, 4), F(1, 2)))])
    # first block wraps around the second, so no ordering works
    assert not is_left_right_ordered(q)


def test_refine_matches_expected_blocks():
    p = LRPartition([half_open(0, F(1, 2)), _u((F(1, 2), 1))])
    q = LRPartition([half_open(0, F(1, 4)), _u((F(1, 4), 1))])
    r = refine(p, q)
    got = [str(b) for b in r.blocks]
    assert got == ["[0,1/4)", "[1/4,1/2)", "[1/2,1]"]
    assert diam_sum(r) == 1


def test_refine_requires_same_support():
    p = LRPartition([_u((0, 1))])
    q = LRPartition([_u((0, F(1, 2)))])
    with pytest.raises(DomainMismatchError):
        refine(p, q)


def test_diam_sum_counts_block_diameters():
    p = LRPartition([_u((0, F(1, 5))), _u((F(4, 5), 1))])
    assert diam_sum(p) == F(2, 5)
    # a block spanning a gap counts the gap in its diameter
    wide = LRPartition([_u((0, F(1, 5)), (F(4, 5), 1))])
    assert diam_sum(wide) == 1


def test_refinement_never_exceeds_either_input():
    p = LRPartition([_u((0, F(1, 5))), _u((F(4, 5), 1))])
    r = refine(p, p)
    assert diam_sum(r) == F(2, 5)
    wide = LRPartition([_u((0, F(1, 5)), (F(4, 5), 1))])
    fine = refine(wide, p)
    assert diam_sum(fine) <= min(diam_sum(wide), diam_sum(p))
    assert fine.support() == p.support()


def test_greedy_partition_blocks_are_delta_fine():
    u = _u((0, 1))
    p = greedy_partition(u, F(1, 4))
    assert len(p) == 4
    assert all(b.diam <= F(1, 4) for b in p.blocks)
    assert p.support() == u
    # non-divisible delta leaves a short last block
    p2 = greedy_partition(u, F(3, 8))
    assert [b.diam for b in p2.blocks] == [F(3, 8), F(3, 8), F(1, 4)]
    with pytest.raises(ValueError):
        greedy_partition(u, 0)


def test_greedy_partition_multi_component():
    u = _u((0, F(1, 9)), (F(2, 9), F(1, 3)))
    p = greedy_partition(u, F(1, 9))
    assert p.support() == u
    assert all(b.diam <= F(1, 9) for b in p.blocks)


def test_cover_sum():
    p = greedy_partition(_u((0, 1)), F(1, 4))
    cs = cover_sum(p, F(1, 4))
    assert isinstance(cs, CoverSum)
    assert cs.value == 1
    assert cs.delta == F(1, 4)
    assert cs.block_count == 4
    with pytest.raises(ValueError):
        cover_sum(p, F(1, 8))  # blocks are too wide for this delta


def test_cover_sum_level2_cantor_cover():
    cover = _u((0, F(1, 9)), (F(2, 9), F(1, 3)), (F(2, 3), F(7, 9)), (F(8, 9), 1))
    p = LRPartition([IntervalUnion((c,)) for c in cover.components])
    cs = cover_sum(p, F(1, 9))
    assert cs.value == F(4, 9)
    assert cs.block_count == 4


def test_partition_json_roundtrip():
    p = LRPartition([half_open(0, F(1, 2)), _u((F(1, 2), 1))])
    assert LRPartition.from_json(p.to_json()).blocks == p.blocks
