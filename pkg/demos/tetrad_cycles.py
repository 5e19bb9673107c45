#!/usr/bin/env python3
"""Twelve-arrow cycles on tetrad matrices.

Compares the walk enumerator with the choice-tree count and prints one
cycle of order 3 over its matrix.
"""

from __future__ import annotations

from brauercat.tetrad import (
    canonical_system,
    choice_tree,
    cycle_count_formula,
    enumerate_cycles,
    render_cycle,
)


def main() -> None:
    print("order  walks  tree leaves  i^3+(i+1)^2")
    for order in range(2, 8):
        walks = len(enumerate_cycles(canonical_system(order)))
        leaves = choice_tree(order).leaves()
        print(f"{order:>5}  {walks:>5}  {leaves:>11}  {cycle_count_formula(order - 1):>11}")

    tree = choice_tree(3)
    print(f"\nchoice tree for order 3, level sizes {tree.level_sizes()}")
    for child in tree.children:
        print(f"  {child.label}: " + ", ".join(f"{g.label}({g.leaves()})" for g in child.children))

    system = canonical_system(3)
    cycle = next(c for c in enumerate_cycles(system) if c.choices == (3, 1, 3))
    print("\n" + " -> ".join(str(v) for v in cycle.vertices))
    print(render_cycle(system, cycle))


if __name__ == "__main__":
    main()
