"""Driving the command-line interface programmatically.

Every capability is also reachable through the `dbecurves` console script
(equivalently `python3 -m dbecurves.cli`): construct a curve spec, certify
its length, verify the combinatorial checks, and emit data series.  This
script shells out the same way an external pipeline would.
"""

import json
import subprocess
import sys


def run(*args):
    proc = subprocess.run(
        [sys.executable, "-m", "dbecurves.cli", *args],
        capture_output=True, text=True,
    )
    return proc.returncode, proc.stdout


def main():
    print("== construct: exact curve spec as JSON ==")
    code, out = run("construct", "--n", "3", "--a", "1/4")
    spec = json.loads(out)
    print(f"  exit {code}; n = {spec['n']}, alpha = {spec['alpha']}, "
          f"{len(spec['components'])} component function(s)")

    print()
    print("== certify: length certificate for the n = 4 curve ==")
    code, out = run("certify", "--n", "4", "--d", "12")
    cert = json.loads(out)
    print(f"  exit {code}; upper = {cert['upper']}, "
          f"lower = {cert['lower'][:12]}..., method = {cert['method']}")

    print()
    print("== verify: pairwise coordinate check and family search ==")
    code, out = run("verify", "--dbe", "--n", "3", "--d", "5")
    report = json.loads(out)
    print(f"  exit {code}; {report['pair_count']} pairs, ok = {report['ok']}")
    code, out = run("verify", "--family", "--n", "5")
    fam = json.loads(out)
    print(f"  exit {code}; max family size {fam['max_family_size']} on 5 "
          f"elements (near-pencil attains it: {fam['near_pencil_attains']})")

    print()
    print("== emit: CSV series for plotting ==")
    code, out = run("emit", "--boxcount", "--n", "3", "--m", "4..8")
    print(f"  exit {code}; box counts:")
    for line in out.strip().splitlines():
        print(f"    {line}")

    print()
    print("== bad input exits 2 with a diagnostic ==")
    proc = subprocess.run(
        [sys.executable, "-m", "dbecurves.cli", "construct", "--n", "2"],
        capture_output=True, text=True,
    )
    print(f"  exit {proc.returncode}; stderr: {proc.stderr.strip()}")


if __name__ == "__main__":
    main()
