"""Certifying the length (1-dimensional Hausdorff measure) of a curve.

The upper bound is exact rational arithmetic: the measure of the graph of
n-2 monotone component functions is at most 1 + sum of their image
measures, which telescopes to exactly n - 1 for the extremal curves.  The
lower bound is an inscribed polyline whose chord sum is enclosed with a
rigorous error radius, so value - radius is a true lower bound.  Box
counts at dyadic scales give an independent dimension estimate.
"""

from fractions import Fraction

from dbecurves import (
    box_count_slope,
    build_extremal_curve,
    certify_h1,
    polyline_length,
    upper_bound_h1,
)

F = Fraction


def main():
    print("== exact upper bounds: always n - 1 ==")
    for n in (3, 4, 5, 6):
        curve = build_extremal_curve(n)
        print(f"  n = {n}: H^1(curve) <= {upper_bound_h1(curve)}")

    print()
    print("== certified polyline lower bounds (n = 3, a = 1/4) ==")
    curve = build_extremal_curve(3)
    print(f"  {'depth':>5}  {'length (midpoint)':>20}  {'error radius':>14}")
    for d in (1, 2, 4, 8, 16, 32, 64):
        value, radius = polyline_length(curve, d)
        print(f"  {d:>5}  {float(value):>20.15f}  {float(radius):>14.3e}")
    print("  the sequence increases toward the upper bound 2 but, like any")
    print("  inscribed polyline of a singular graph, never reaches it.")

    print()
    print("== the first depth whose certified length clears 1.9 ==")
    d = 1
    while True:
        value, radius = polyline_length(curve, d)
        if value - radius >= F(19, 10):
            print(f"  depth {d}: length {float(value):.15f} "
                  f"(radius {float(radius):.1e})")
            break
        d += 1

    print()
    print("== a full certificate as emitted by the command line ==")
    cert = certify_h1(curve, depth=20)
    for key, val in sorted(cert.to_json().items()):
        print(f"  {key}: {val}")

    print()
    print("== box-count dimension estimate ==")
    slope, series = box_count_slope(curve, range(4, 11))
    for bc in series:
        print(f"  delta = {str(bc.delta):>7}: {bc.count:>5} boxes")
    print(f"  log-log slope: {slope:.5f}  (a curve should sit near 1)")


if __name__ == "__main__":
    main()
