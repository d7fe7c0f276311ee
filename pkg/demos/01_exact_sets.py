"""Exact interval-union arithmetic: no floats, no rounding, ever.

Walks through building unions, the open/closed bookkeeping that makes set
subtraction exact, measures, and the inclusion-exclusion identity on
randomly generated unions.
"""

import random
from fractions import Fraction

from dbecurves import Interval, IntervalUnion

F = Fraction


def main():
    print("== exact interval unions ==")
    box = IntervalUnion.closed(0, 1)
    middle = IntervalUnion.closed(F(1, 4), F(3, 4))
    left_right = box - middle
    print(f"[0,1] minus [1/4,3/4]      = {left_right}")
    print(f"measure of the difference  = {left_right.measure()}")
    print(f"contains 1/4?                {left_right.contains(F(1, 4))}")
    print(f"contains 1/5?                {left_right.contains(F(1, 5))}")

    print()
    print("subtracting back restores the middle exactly:")
    print(f"[0,1] minus the difference = {box - left_right}")

    print()
    print("== touching components merge, pinholes do not ==")
    a = IntervalUnion((Interval(F(0), F(1, 2), hi_closed=False),))
    b = IntervalUnion.closed(F(1, 2), 1)
    print(f"[0,1/2) u [1/2,1] = {a | b}")
    c = IntervalUnion((Interval(F(1, 2), F(1), lo_closed=False),))
    print(f"[0,1/2) u (1/2,1] = {a | c}   (note the missing point)")

    print()
    print("== inclusion-exclusion on random unions (exact, 1000 rounds) ==")
    rng = random.Random(20260815)
    checked = 0
    for _ in range(1000):
        def rand_union():
            k = rng.randint(1, 3)
            pts = sorted(rng.sample(range(0, 129), 2 * k))
            return IntervalUnion(
                Interval(F(pts[2 * i], 128), F(pts[2 * i + 1], 128))
                for i in range(k)
            )

        u, v = rand_union(), rand_union()
        lhs = (u | v).measure() + (u & v).measure()
        rhs = u.measure() + v.measure()
        assert lhs == rhs
        checked += 1
    print(f"measure(u|v) + measure(u&v) == measure(u) + measure(v) "
          f"held exactly in {checked}/1000 rounds")


if __name__ == "__main__":
    main()
