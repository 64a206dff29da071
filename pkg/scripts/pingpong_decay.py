#!/usr/bin/env python3
"""Print the partition-interval decay table for both circles.

The Delta(10)/Delta(0) ratios printed here are the regression constants
pinned in tests/test_acceptance.py.
"""

import argparse

from tropmarkov.hyperbolic import partial_orbit_boundary, partial_orbit_skeleton, partition_stats


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--depth", type=int, default=10)
    args = parser.parse_args()

    for side, orbit in (("boundary", partial_orbit_boundary),
                        ("skeleton", partial_orbit_skeleton)):
        print(f"# {side}")
        print("n,count,delta,Delta")
        bigs = []
        for n in range(args.depth + 1):
            delta, big = partition_stats(n, side)
            bigs.append(big)
            print(f"{n},{len(orbit(n))},{delta:.12f},{big:.12f}")
        print(f"# Delta({args.depth})/Delta(0) = {bigs[-1] / bigs[0]!r}")
        print()


if __name__ == "__main__":
    main()
