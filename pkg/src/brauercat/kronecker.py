"""Kronecker block matrices, matrix words and helices.

An (n+1) x 2n matrix is split into two n-column blocks A and B by a word.
A helix is a walk that alternates horizontal arrows (exterior entry to the
pivot of the opposite block in the same row) and vertical arrows (pivot
down or up its column to an exterior entry of a row not yet visited).
Rows and block columns are 1-based and block-local throughout.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb, factorial
from typing import Mapping

import numpy as np

__all__ = [
    "InvalidSystemError",
    "HMatrix",
    "HelixSystem",
    "Entry",
    "HelixArrow",
    "Helix",
    "words",
    "word_to_partition",
    "partition_count",
    "canonical_system",
    "random_system",
    "enumerate_helices",
    "check_helix",
    "helix_count",
    "a_of_n",
    "render_helix",
]


class InvalidSystemError(ValueError):
    pass


def _check_word(word: str, n: int | None = None) -> str:
    if set(word) - {"A", "B"}:
        raise ValueError(f"word {word!r} uses letters other than A and B")
    if word.count("A") != word.count("B"):
        raise ValueError(f"word {word!r} must contain as many A as B")
    if n is not None and len(word) != 2 * n:
        raise ValueError(f"word {word!r} must have length {2 * n}")
    return word


def words(n: int) -> list[str]:
    """All words with n letters A and n letters B, in lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    for a_pos in combinations(range(2 * n), n):
        chars = ["B"] * (2 * n)
        for i in a_pos:
            chars[i] = "A"
        out.append("".join(chars))
    return out


def word_to_partition(word: str) -> tuple[int, ...]:
    """Part k counts the letters A standing after the k-th B (zeros dropped)."""
    _check_word(word)
    parts = []
    remaining_a = word.count("A")
    for ch in word:
        if ch == "A":
            remaining_a -= 1
        elif remaining_a:
            parts.append(remaining_a)
    return tuple(parts)


@lru_cache(maxsize=None)
def partition_count(n: int, k: int, m: int) -> int:
    """Partitions of m into at most k parts, each at most n."""
    if m == 0:
        return 1
    if m < 0 or n <= 0 or k <= 0:
        return 0
    # either no part equals n, or remove one part equal to n
    return partition_count(n - 1, k, m) + partition_count(n, k - 1, m - n)


@dataclass(frozen=True)
class HMatrix:
    n: int
    word: str
    entries: np.ndarray

    def __post_init__(self) -> None:
        _check_word(self.word, self.n)
        if self.entries.shape != (self.n + 1, 2 * self.n):
            raise InvalidSystemError(f"entries must have shape {(self.n + 1, 2 * self.n)}")

    def columns(self, block: str) -> list[int]:
        """Global (0-based) column positions of a block, in block order."""
        return [i for i, ch in enumerate(self.word) if ch == block]

    def block(self, block: str) -> np.ndarray:
        return self.entries[:, self.columns(block)]


@dataclass(frozen=True)
class HelixSystem:
    matrix: HMatrix
    row_i: int
    row_j: int
    pivots_A: Mapping[int, int]
    pivots_B: Mapping[int, int]

    def __post_init__(self) -> None:
        n = self.matrix.n
        rows = set(range(1, n + 2))
        if self.row_i not in rows or self.row_j not in rows or self.row_i == self.row_j:
            raise InvalidSystemError("row_i and row_j must be distinct rows")
        for name, piv, skip in (("A", self.pivots_A, self.row_i), ("B", self.pivots_B, self.row_j)):
            if set(piv) != rows - {skip}:
                raise InvalidSystemError(f"pivots of {name} must cover every row except {skip}")
            if sorted(piv.values()) != list(range(1, n + 1)):
                raise InvalidSystemError(f"pivots of {name} must use each column once")

    @property
    def n(self) -> int:
        return self.matrix.n

    def pivots(self, block: str) -> Mapping[int, int]:
        return self.pivots_A if block == "A" else self.pivots_B

    def is_pivot(self, entry: Entry) -> bool:
        return self.pivots(entry.block).get(entry.row) == entry.col


@dataclass(frozen=True, order=True)
class Entry:
    block: str
    row: int
    col: int

    def __str__(self) -> str:
        return f"{self.block.lower()}{self.row},{self.col}"


@dataclass(frozen=True)
class HelixArrow:
    kind: str  # "H" or "V"
    src: Entry
    dst: Entry


@dataclass(frozen=True)
class Helix:
    arrows: tuple[HelixArrow, ...]

    @property
    def vertices(self) -> tuple[Entry, ...]:
        return (self.arrows[0].src,) + tuple(a.dst for a in self.arrows)

    @property
    def start_column(self) -> int:
        return self.arrows[0].src.col

    @property
    def rows(self) -> tuple[int, ...]:
        """Rows of the horizontal arrows, in order."""
        return tuple(a.src.row for a in self.arrows if a.kind == "H")

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "arrows": [
                {"kind": a.kind, "from": str(a.src), "to": str(a.dst)} for a in self.arrows
            ],
        }


def canonical_entries(n: int) -> np.ndarray:
    """Preprojective presentation: A has ones at (r+1, r), B at (r, r)."""
    a = np.zeros((n + 1, n), dtype=np.int8)
    b = np.zeros((n + 1, n), dtype=np.int8)
    for r in range(n):
        a[r + 1, r] = 1
        b[r, r] = 1
    return np.hstack([a, b])


def canonical_system(n: int) -> HelixSystem:
    if n < 1:
        raise ValueError("n must be positive")
    mat = HMatrix(n, "A" * n + "B" * n, canonical_entries(n))
    return HelixSystem(
        mat,
        row_i=1,
        row_j=n + 1,
        pivots_A={r: r - 1 for r in range(2, n + 2)},
        pivots_B={r: r for r in range(1, n + 1)},
    )


def random_system(n: int, seed: int) -> HelixSystem:
    """A uniformly random valid system; deterministic in ``seed``."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    a_pos = set(rng.sample(range(2 * n), n))
    word = "".join("A" if i in a_pos else "B" for i in range(2 * n))
    row_i, row_j = rng.sample(range(1, n + 2), 2)
    piv = {}
    for block, skip in (("A", row_i), ("B", row_j)):
        rows = [r for r in range(1, n + 2) if r != skip]
        cols = list(range(1, n + 1))
        rng.shuffle(cols)
        piv[block] = dict(zip(rows, cols))
    entries = np.zeros((n + 1, 2 * n), dtype=np.int8)
    for block in "AB":
        cols = [i for i, ch in enumerate(word) if ch == block]
        for r, c in piv[block].items():
            entries[r - 1, cols[c - 1]] = 1
    return HelixSystem(HMatrix(n, word, entries), row_i, row_j, piv["A"], piv["B"])


def _other(block: str) -> str:
    return "B" if block == "A" else "A"


def enumerate_helices(system: HelixSystem, fixed_start: int | None = None) -> list[Helix]:
    """All helices, depth first; start columns and landing rows ascending."""
    n = system.n
    all_rows = range(1, n + 2)
    starts = range(1, n + 1) if fixed_start is None else [fixed_start]
    if fixed_start is not None and not 1 <= fixed_start <= n:
        raise InvalidSystemError(f"start column {fixed_start} out of range")
    out: list[Helix] = []

    def extend(at: Entry, visited: set[int], arrows: list[HelixArrow]) -> None:
        # ``at`` is an exterior entry; take the horizontal arrow from it
        target = _other(at.block)
        col = system.pivots(target).get(at.row)
        if col is None:
            return
        if target == "B" and at.row == system.row_j:
            return
        pivot = Entry(target, at.row, col)
        arrows.append(HelixArrow("H", at, pivot))
        if len(visited) == n + 1:
            out.append(Helix(tuple(arrows)))
        else:
            for row in all_rows:
                if row in visited:
                    continue
                low = Entry(target, row, col)
                if system.is_pivot(low):
                    continue
                arrows.append(HelixArrow("V", pivot, low))
                visited.add(row)
                extend(low, visited, arrows)
                visited.discard(row)
                arrows.pop()
        arrows.pop()

    for c in starts:
        first = Entry("A", system.row_i, c)
        if system.is_pivot(first):
            continue
        extend(first, {system.row_i}, [])
    return out


def check_helix(system: HelixSystem, helix: Helix) -> list[str]:
    """Independent structural check; returns the list of broken rules."""
    n = system.n
    problems = []
    arrows = helix.arrows
    kinds = "".join(a.kind for a in arrows)
    if kinds != "H" + "VH" * n:
        problems.append(f"arrow pattern {kinds!r} is not H(VH)^n")
        return problems
    first = arrows[0].src
    if first.block != "A" or first.row != system.row_i:
        problems.append("first arrow does not start in block A at row_i")
    horizontals = [a for a in arrows if a.kind == "H"]
    for k, a in enumerate(horizontals, start=1):
        want = ("A", "B") if k % 2 else ("B", "A")
        if (a.src.block, a.dst.block) != want:
            problems.append(f"horizontal {k} goes {a.src.block}->{a.dst.block}")
        if a.src.row != a.dst.row:
            problems.append(f"horizontal {k} changes row")
        if system.is_pivot(a.src):
            problems.append(f"horizontal {k} starts at a pivot")
        if not system.is_pivot(a.dst):
            problems.append(f"horizontal {k} does not end at a pivot")
        if a.src.row == system.row_j and a.src.block == "A":
            problems.append("row_j is entered by an A->B horizontal")
    rows = [a.src.row for a in horizontals]
    if sorted(rows) != list(range(1, n + 2)):
        problems.append(f"horizontal rows {rows} do not visit each row once")
    pivots = [a.dst for a in horizontals]
    if len(set(pivots)) != len(pivots):
        problems.append("a pivot is used twice")
    verticals = [a for a in arrows if a.kind == "V"]
    cols = [(a.src.block, a.src.col) for a in verticals]
    if len(set(cols)) != len(cols):
        problems.append("a block column carries two vertical arrows")
    for a in verticals:
        if a.src.block != a.dst.block or a.src.col != a.dst.col:
            problems.append("vertical arrow leaves its column")
        if not system.is_pivot(a.src) or system.is_pivot(a.dst):
            problems.append("vertical arrow does not go from a pivot to an exterior entry")
    for prev, nxt in zip(arrows, arrows[1:]):
        if prev.dst != nxt.src:
            problems.append("arrows are not contiguous")
            break
    return problems


def helix_count(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return factorial(n) * ((n + 1) // 2)


def a_of_n(n: int) -> int:
    return helix_count(n) // n


def central_binomial(n: int) -> int:
    return comb(2 * n, n)


def render_helix(system: HelixSystem, helix: Helix) -> str:
    """ASCII overlay: rows by global columns, visit order in each cell.

    Pivots untouched by the helix show ``*`` and other cells ``.``.
    """
    mat = system.matrix
    n = mat.n
    grid = [["." for _ in range(2 * n)] for _ in range(n + 1)]
    for block in "AB":
        cols = mat.columns(block)
        for r, c in system.pivots(block).items():
            grid[r - 1][cols[c - 1]] = "*"
    for k, v in enumerate(helix.vertices):
        cols = mat.columns(v.block)
        grid[v.row - 1][cols[v.col - 1]] = str(k)
    width = max(len(c) for row in grid for c in row)
    header = " ".join(ch.rjust(width) for ch in mat.word)
    lines = ["    " + header]
    for r, row in enumerate(grid, start=1):
        lines.append(f"{r:>3} " + " ".join(c.rjust(width) for c in row))
    return "\n".join(lines)

