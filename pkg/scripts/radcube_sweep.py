#!/usr/bin/env python3
"""Run random Gram data through normalization and count configuration shapes."""

import argparse
import random
from collections import Counter

from mskit.fields import PrimeField
from mskit.radcube import normalize_arr, radcube_to_configuration
from mskit.randgen import random_gram


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("-p", type=int, default=5, help="field characteristic")
    args = ap.parse_args()

    rng = random.Random(args.seed)
    field = PrimeField(args.p)
    shapes = Counter()
    block_kinds = Counter()
    for _ in range(args.count):
        spec = random_gram(rng, field)
        arr = normalize_arr(spec)
        for block in arr.blocks:
            block_kinds["self-paired" if len(block) == 1 else "hyperbolic"] += 1
        cfg = radcube_to_configuration(spec)
        shapes[(len(cfg.polygons), len(cfg.nontruncated()))] += 1
    print(f"{args.count} Gram specifications over F{args.p}")
    print("normalized blocks:", dict(block_kinds))
    print("configuration shapes (polygons, nontruncated vertices):")
    for shape, n in sorted(shapes.items()):
        print(f"  {shape}: {n}")


if __name__ == "__main__":
    main()
