#!/usr/bin/env python3
"""Decompose random modules and report how often generator trims were needed."""

import argparse
import random
import time

import mskit.decompose as decompose_mod
from mskit.decompose import decompose_multiserial, verify_multiserial
from mskit.randgen import random_representation, random_special_presentation


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--count", type=int, default=150)
    ap.add_argument("--max-dim", type=int, default=12)
    args = ap.parse_args()

    trims = [0]
    original = decompose_mod._try_trim

    def counting(*a, **k):
        hit = original(*a, **k)
        if hit is not None:
            trims[0] += 1
        return hit

    decompose_mod._try_trim = counting

    rng = random.Random(args.seed)
    t0 = time.time()
    sizes = []
    for i in range(args.count):
        pres = random_special_presentation(rng)
        rep = random_representation(rng, pres, max_dim=args.max_dim)
        parts = decompose_multiserial(rep)
        assert verify_multiserial(rep, parts), f"checker failed at sample {i}"
        sizes.append((rep.total_dim, len(parts)))
    elapsed = time.time() - t0
    decompose_mod._try_trim = original
    print(f"{args.count} modules decomposed and certified in {elapsed:.2f}s")
    print(f"generator trims applied: {trims[0]}")
    biggest = max(sizes)
    print(f"largest module: dim {biggest[0]} with {biggest[1]} uniserials")


if __name__ == "__main__":
    main()
