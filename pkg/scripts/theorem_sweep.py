#!/usr/bin/env python3
"""Sweep the bundled parameter corpus: build each couple, then compare the
trace character against the closed form on seeded random elements.

Usage: python scripts/theorem_sweep.py [--samples N] [--seed S] [--window W]
"""

import argparse
import time

from ybw.cli import corpus_dir
from ybw.construct import build_couple, end_to_end_check
from ybw.couple import verify_extremality
from ybw.hirai import is_yb_admissible
from ybw.io import params_from_json, read_json_file
from ybw.rng import Lcg64

CORPUS = (
    "z2_half_half.params.json",
    "s3_std.params.json",
    "s3_triv_std.params.json",
    "z3_eps_mix.params.json",
    "q8_2dim.params.json",
)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--window", type=int, default=5,
                    help="supports are sampled inside [1, window]")
    ap.add_argument("--pairs", type=int, default=25,
                    help="disjoint-support pairs for the extremality check")
    args = ap.parse_args()

    print(f"{'corpus file':34} {'d':>2} {'chars':>6} {'pairs':>6} {'time':>7}")
    for name in CORPUS:
        params = params_from_json(read_json_file(corpus_dir() / name), name)
        adm = is_yb_admissible(params)
        assert adm.verdict, name
        start = time.time()
        rng = Lcg64(args.seed)
        sample = [rng.wreath_element(params.group, 1, args.window)
                  for _ in range(args.samples)]
        result = end_to_end_check(params, sample)
        assert result.ok, (name, result.char_mismatches[:1])
        couple, _ = build_couple(params)
        pair_rng = Lcg64(args.seed + 1)
        pairs = [pair_rng.disjoint_pair(params.group) for _ in range(args.pairs)]
        ext = verify_extremality(couple, pairs)
        assert ext.ok, name
        elapsed = time.time() - start
        print(f"{name:34} {couple.d:>2} {result.samples:>6} "
              f"{ext.pairs_checked:>6} {elapsed:>6.2f}s")
    print("all corpus sets verified exactly")


if __name__ == "__main__":
    main()
