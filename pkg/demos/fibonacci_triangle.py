#!/usr/bin/env python3
"""Even-index Fibonacci numbers as weighted rows of a partition triangle."""

from __future__ import annotations

from brauercat.fibtriangle import (
    build_triangle,
    fibonacci_partition_check,
    hook_rule_check,
    partition_terms,
    render_triangle,
)


def main() -> None:
    tri = build_triangle(12)
    print(render_triangle(tri))
    print("\n t  f(2t+2)  weighted row")
    for t in range(13):
        f, total, ok = fibonacci_partition_check(tri, t)
        print(f"{t:>2}  {f:>7}  {total:>12}  {'ok' if ok else 'FAIL'}")
    for t in (3, 4):
        terms = " + ".join(f"{d}*{w}" for w, d in partition_terms(tri, t))
        print(f"f_{2 * t + 2} = {terms}")
    deep = build_triangle(13)
    print("hook rule:", {i: hook_rule_check(deep, i) for i in range(4, 8)})


if __name__ == "__main__":
    main()
