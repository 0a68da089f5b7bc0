"""Print the wall-crossing table for n+1 points on P^1 (one of weight t).

For each wall t0 = n - 2m: the X^0 data, the Poincaré polynomial just below
the wall, and a brute-force count of strictly semistable configurations.

    python scripts/wall_crossing_table.py 7
"""

import argparse
from fractions import Fraction

from vgit import betti, points


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("n", type=int, nargs="?", default=5)
    args = ap.parse_args()
    n = args.n
    configs = list(points.all_configurations(n)) if n <= 8 else []
    below = dict(betti.chamber_poincare(n)) if n % 2 else {}
    print(f"n = {n}: {len(configs) or 'skipped'} configurations")
    print(f"{'m':>2} {'t0':>3} {'comps':>6} {'fibres (-,+)':>13} {'strict':>7}  P below wall")
    for t0 in points.walls_points(n):
        m = (n - int(t0)) // 2
        wg = points.wall_geometry(n, m)
        strict = sum(
            points.is_semistable(c, Fraction(t0)) is points.Stability.STRICTLY_SEMISTABLE for c in configs
        )
        fib = f"P^{wg.fibers[0]}, P^{wg.fibers[1]}"
        poly = str(below[m]) if m in below else "-"
        print(f"{m:>2} {int(t0):>3} {wg.component_count:>6} {fib:>13} {strict:>7}  {poly}")
    if n % 2:
        print(f"ordered quotient:   {betti.poincare_ordered(n)}")
        print(f"symmetric quotient: {betti.poincare_symmetric(n)}")


if __name__ == "__main__":
    main()
