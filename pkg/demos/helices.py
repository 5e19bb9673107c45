#!/usr/bin/env python3
"""Helices on Kronecker block matrices.

Counts helices on the canonical system and on seeded random systems, then
draws the four helices that start in column 1 for n = 3.
"""

from __future__ import annotations

import argparse

from brauercat.kronecker import (
    canonical_system,
    enumerate_helices,
    helix_count,
    random_system,
    render_helix,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(" n  canonical  random  n!*ceil(n/2)")
    for n in range(1, args.max_n + 1):
        canon = len(enumerate_helices(canonical_system(n)))
        rand = len(enumerate_helices(random_system(n, args.seed + n)))
        print(f"{n:>2}  {canon:>9}  {rand:>6}  {helix_count(n):>12}")

    system = canonical_system(3)
    for k, h in enumerate(enumerate_helices(system, fixed_start=1), start=1):
        print(f"\nhelix {k}: " + " ".join(str(v) for v in h.vertices))
        print(render_helix(system, h))


if __name__ == "__main__":
    main()
