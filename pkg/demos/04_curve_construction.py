"""Curves whose point pairs agree in exactly one coordinate.

Builds the extremal curve in dimensions 3 through 5, samples it on dyadic
grids, and verifies the pairwise unique-shared-coordinate property by
brute force.  Also shows why the obvious diagonal fails the check, and
why the Cantor function cannot replace the strictly increasing component.
"""

from fractions import Fraction

from dbecurves import (
    Cantor,
    CurveSpec,
    build_extremal_curve,
    check_dbe_property,
    sample,
)

F = Fraction


def main():
    print("== the extremal curve in R^3 ==")
    curve = build_extremal_curve(3, a=F(1, 4), alpha=F(1, 2))
    for x in (F(0), F(1, 4), F(1, 2), F(3, 4), F(1)):
        print(f"  x = {str(x):>4}: point {curve.point(x)}")

    print()
    print("== pairwise check on a depth-6 sample (65 points) ==")
    pts = sample(curve, 6)
    report = check_dbe_property(pts)
    print(f"  pairs checked: {report.pair_count}")
    print(f"  every pair agrees in exactly one coordinate: {report.ok}")

    print()
    print("== the same check in dimensions 4 and 5 ==")
    for n in (4, 5):
        c = build_extremal_curve(n)
        r = check_dbe_property(sample(c, 5))
        print(f"  n = {n}: {r.pair_count} pairs, ok = {r.ok}")

    print()
    print("== why strictness matters: the Cantor function fails ==")
    bad = CurveSpec(3, (Cantor(),), F(1, 2))
    r = check_dbe_property(sample(bad, 5))
    print(f"  (x, c(x), 1/2) sampled at depth 5: ok = {r.ok}, "
          f"{len(r.violations)} violating pairs")
    i, j, count = r.violations[0]
    print(f"  e.g. points {i} and {j} agree in {count} coordinates")
    print(f"    {sample(bad, 5)[i]}")
    print(f"    {sample(bad, 5)[j]}")

    print()
    print("== structure of the n = 4 curve ==")
    c4 = build_extremal_curve(4, M=4, staircase_depth=2)
    print(f"  strictly increasing base h with weight a = {c4.a}")
    print(f"  mapper count: {len(c4.mappers)}")
    w = c4.w_domains[0]
    print(f"  W_1 = h^(-1)(N_1) has {len(w.components)} components, "
          f"measure {w.measure()}")
    print(f"  remaining domain q1 measure: {c4.q1.measure()}")


if __name__ == "__main__":
    main()
