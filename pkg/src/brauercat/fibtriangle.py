"""Partition triangle whose weighted rows give even-index Fibonacci numbers.

Entries ``d[i][j]`` use row ``i`` and column ``j``, with column 0 the
rightmost column of the displayed triangle.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "FibTriangle",
    "build_triangle",
    "weight",
    "fibonacci",
    "fibonacci_partition_check",
    "partition_terms",
    "hook_rule_check",
    "render_triangle",
]


@dataclass(frozen=True)
class FibTriangle:
    depth: int
    values: tuple[tuple[int, ...], ...]  # values[i][j], 0 <= j <= i

    def d(self, i: int, j: int) -> int:
        if not 0 <= j <= i <= self.depth:
            raise IndexError(f"d[{i}][{j}] outside a triangle of depth {self.depth}")
        return self.values[i][j]

    def column(self, j: int) -> list[int]:
        """Nonzero entries of column j, top to bottom."""
        return [self.values[i][j] for i in range(j, self.depth + 1, 2)]


def build_triangle(depth: int) -> FibTriangle:
    """Fill rows in increasing order from the base rows 0-2.

    Column 0 needs d[i][-1], which the recurrence leaves open; it is read
    as d[i][1] (a mirror boundary), the only choice consistent with the
    known column 1, 2, 7, 29, ...
    """
    if depth < 2:
        raise ValueError("depth must be at least 2")
    rows: list[list[int]] = [[1], [0, 1], [2, 0, 1]]
    for i in range(2, depth):
        prev, cur = rows[i - 1], rows[i]

        def at(row: list[int], j: int) -> int:
            if j < 0:
                j = -j
            return row[j] if j < len(row) else 0

        nxt = [0] * (i + 2)
        for col in range(i + 2):
            j = col + 1
            nxt[col] = 2 * at(cur, j) + at(cur, j - 2) - at(prev, j - 1)
        rows.append(nxt)
    return FibTriangle(depth, tuple(tuple(r) for r in rows[: depth + 1]))


def weight(i: int, j: int) -> int:
    """Weight of the entry at distance j from the diagonal in row i."""
    if not 0 <= j <= i:
        raise ValueError("need 0 <= j <= i")
    if i == j:
        return 1 if i % 2 == 0 else 0
    if j % 2:
        return 0
    a = -1 if i % 2 == 0 else 0
    return 3 * 2 ** (2 * ((i - j) // 2) + a)


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def partition_terms(tri: FibTriangle, t: int) -> list[tuple[int, int]]:
    """(weight, entry) pairs of row t, from the diagonal outwards."""
    return [(weight(t, j), tri.d(t, t - j)) for j in range(t + 1)]


def fibonacci_partition_check(tri: FibTriangle, t: int) -> tuple[int, int, bool]:
    f = fibonacci(2 * t + 2)
    total = sum(w * d for w, d in partition_terms(tri, t))
    return f, total, f == total


def hook_rule_check(tri: FibTriangle, i: int) -> bool:
    if i < 4:
        raise ValueError("the hook rule starts at i = 4")
    if 2 * i - 1 > tri.depth:
        raise ValueError(f"depth {tri.depth} too small for i = {i}")
    lhs = sum(tri.d(i + t, i - t) for t in range(i - 1)) + tri.d(2 * i - 2, 0)
    return lhs == tri.d(2 * i - 1, 1)


def render_triangle(tri: FibTriangle) -> str:
    """Rows with column 0 on the right; zero entries shown as dots."""
    width = len(str(max(max(r) for r in tri.values)))
    lines = []
    for i, row in enumerate(tri.values):
        cells = [str(x) if x else "." for x in reversed(row)]
        pad = " " * ((tri.depth - i) * (width + 1) // 2)
        lines.append(pad + " ".join(c.rjust(width) for c in cells))
    return "\n".join(lines)
