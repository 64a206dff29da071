#!/usr/bin/env python3
"""Sweep random meromorphic parameters and report exception-set statistics:
how often sampled skeleton points fall outside the table orbit, split by the
terminal kind of their greedy reduction."""

import argparse
import random
from collections import Counter

from tropmarkov.classifier import classify
from tropmarkov.dynamics import greedy_path
from tropmarkov.sampling import random_params, random_skeleton_point


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--samples", type=int, default=2000)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    tally = Counter()
    for _ in range(args.samples):
        params = random_params(rng, meromorphic=True)
        x = random_skeleton_point(rng, params)
        report = classify(params, x)
        trace = greedy_path(params, x)
        tally[(report.in_U, trace.kind)] += 1
    print("in_U,greedy_kind,count")
    for (in_u, kind), count in sorted(tally.items()):
        print(f"{in_u},{kind},{count}")


if __name__ == "__main__":
    main()
