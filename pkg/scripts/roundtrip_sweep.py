#!/usr/bin/env python3
"""Sweep random configurations through build + recover and report timings."""

import argparse
import random
import time

from mskit.brauer import build_algebra
from mskit.fields import PrimeField, QQ
from mskit.randgen import random_configuration
from mskit.recovery import config_isomorphic, recover_configuration


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--polygons", type=int, default=6)
    ap.add_argument("--maxval", type=int, default=5)
    ap.add_argument("--maxmu", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    fields = [QQ, PrimeField(5)]
    t0 = time.time()
    dims = []
    for i in range(args.count):
        cfg = random_configuration(rng, args.polygons, args.maxval, args.maxmu)
        pres = build_algebra(cfg, fields[i % 2])
        back = recover_configuration(pres)
        assert config_isomorphic(back, cfg), f"roundtrip failed at sample {i}"
        dims.append(pres.dimension())
    elapsed = time.time() - t0
    print(f"{args.count} roundtrips in {elapsed:.2f}s ({elapsed / args.count * 1000:.2f} ms each)")
    print(f"algebra dimensions: min {min(dims)}, max {max(dims)}, mean {sum(dims) / len(dims):.1f}")


if __name__ == "__main__":
    main()
