"""Regenerate regression.json from the independent oracle routines.

Run from the repository root:

    python3 tests/fixtures/make_regression.py

Every stored value comes from the oracle module (affine-walk Cantor values,
digit-product Riesz-Nagy values, decimal-sqrt polylines, raster brackets,
greedy cover sums), never from the estimators under test.  The test suite
recomputes the estimator side and compares against this file, so regenerate
only when the corpus itself is meant to change.
"""

from __future__ import annotations

import json
import random
from fractions import Fraction
from pathlib import Path

import sys

sys.path.insert(0, str(Path(__file__).resolve().parents[2] / "src"))

from dbecurves.exact import IntervalUnion, Interval, format_rational  # noqa: E402
from dbecurves import oracle  # noqa: E402

GENERATED = "2026-08-15"

CANTOR_POINTS = [
    "0/1", "1/1", "1/2", "1/3", "2/3", "1/4", "3/4", "1/7", "2/7", "1/9",
    "5/27", "13/16", "355/1024", "1/5", "2/5", "3/7", "7/9", "12/13",
    "99/101", "1023/1024",
]

RIESZ_WEIGHTS = ["1/4", "2/5", "3/4"]

IMAGE_UNION_SEED = 20260815
COVER_SEED = 977


def q(x) -> str:
    return format_rational(Fraction(x))


def cantor_section() -> dict:
    values = {s: q(oracle.cantor_value(Fraction(s))) for s in CANTOR_POINTS}
    return {
        "source": "oracle.cantor_value (affine self-similarity walk)",
        "generated": GENERATED,
        "values": values,
    }


def riesz_section() -> dict:
    table = {}
    for a_s in RIESZ_WEIGHTS:
        a = Fraction(a_s)
        entries = {}
        for k in range(0, 65):
            x = Fraction(k, 64)
            entries[q(x)] = q(oracle.riesz_value(a, x))
        table[a_s] = entries
    return {
        "source": "oracle.riesz_value (digit-product formula)",
        "generated": GENERATED,
        "values": table,
    }


def lengths_section() -> dict:
    a = Fraction(1, 4)
    collapsed = {str(d): str(float(oracle.collapsed_riesz_length(a, d)))
                 for d in range(1, 17)}
    naive = {}
    for d in range(1, 17):
        raster = oracle.riesz_raster(a, d)
        naive[str(d)] = str(float(oracle.naive_polyline([raster], d)))
    cantor = {str(d): str(float(oracle.cantor_closed_form_length(d)))
              for d in range(1, 11)}
    return {
        "source": "oracle.collapsed_riesz_length / oracle.naive_polyline / "
                  "oracle.cantor_closed_form_length (decimal sqrt, prec 50)",
        "generated": GENERATED,
        "a": "1/4",
        "tolerance": "2^-40",
        "collapsed": collapsed,
        "naive": naive,
        "cantor_closed_form": cantor,
    }


def _random_dyadic_union(rng: random.Random, exp: int) -> IntervalUnion:
    qden = 1 << exp
    k = rng.randint(1, 3)
    pts = sorted(rng.sample(range(qden + 1), 2 * k))
    return IntervalUnion(
        Interval(Fraction(pts[2 * i], qden), Fraction(pts[2 * i + 1], qden))
        for i in range(k)
    )


def image_section() -> dict:
    rng = random.Random(IMAGE_UNION_SEED)
    cases = []
    rasters = {
        "cantor": oracle.raster_from_fn(
            lambda x: oracle.cantor_value(x), 6),
        "riesz_1/4": oracle.riesz_raster(Fraction(1, 4), 6),
        "identity": oracle.identity_raster(6),
    }
    for name, raster in sorted(rasters.items()):
        for _ in range(6):
            u = _random_dyadic_union(rng, 6)
            lo, hi = oracle.raster_image_measure(raster, u)
            cases.append({
                "fn": name,
                "union": u.to_json(),
                "lower": q(lo),
                "upper": q(hi),
            })
    return {
        "source": "oracle.raster_image_measure (grid-value bracket, m=6)",
        "generated": GENERATED,
        "cases": cases,
    }


def cover_section() -> dict:
    rng = random.Random(COVER_SEED)
    cases = []
    for _ in range(10):
        u = _random_dyadic_union(rng, 5)
        delta = Fraction(1, 1 << rng.randint(2, 4))
        cases.append({
            "union": u.to_json(),
            "delta": q(delta),
            "value": q(oracle.brute_cover_sum(u, delta)),
        })
    return {
        "source": "oracle.brute_cover_sum (greedy left-to-right chop)",
        "generated": GENERATED,
        "cases": cases,
    }


def main() -> None:
    corpus = {
        "schema_version": 1,
        "cantor_values": cantor_section(),
        "riesz_values": riesz_section(),
        "polyline_lengths": lengths_section(),
        "image_measures": image_section(),
        "cover_sums": cover_section(),
    }
    out = Path(__file__).with_name("regression.json")
    out.write_text(json.dumps(corpus, indent=2, sort_keys=True) + "\n",
                   encoding="utf-8")
    print(f"wrote {out}")


if __name__ == "__main__":
    main()
