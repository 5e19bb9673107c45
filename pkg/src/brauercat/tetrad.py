"""Eight-block tetrad matrices and their 12-arrow cycles.

The matrix of order n has a top half (rows of A1..A4) and a bottom half
(rows of A1'..A4'), each with n+1 rows.  Blocks 1-3 are (n+1)-square,
block 4 has n columns; a top block and the bottom block below it share
their columns.  Sub-matrices are keyed ``(block, bottom)``, e.g. ``(3, True)``
for A3'.  Vertices are written ``a1,1``, ``c'3,4`` (block letter, prime for
the bottom half, row, column), all 1-based and sub-matrix local.

A cycle follows a fixed block skeleton.  Horizontal arrows keep their row
and land on the pivot of the neighbouring sub-matrix; vertical arrows keep
their column and go from a pivot to an exterior entry.  The first five
vertices are fixed by the system; three rows are free choices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Mapping

import numpy as np

__all__ = [
    "UnsupportedInputError",
    "InvalidSystemError",
    "TetradMatrix",
    "CycleSystem",
    "Vertex",
    "Cycle",
    "TreeNode",
    "canonical_rep",
    "canonical_system",
    "random_cycle_system",
    "defect",
    "enumerate_cycles",
    "check_cycle",
    "cycle_count_formula",
    "choice_tree",
    "render_cycle",
]


class UnsupportedInputError(ValueError):
    pass


class InvalidSystemError(ValueError):
    pass


Key = tuple[int, bool]
SUBMATRICES: tuple[Key, ...] = tuple((b, bot) for bot in (False, True) for b in (1, 2, 3, 4))


def _name(key: Key) -> str:
    return f"A{key[0]}" + ("'" if key[1] else "")


@dataclass(frozen=True)
class TetradMatrix:
    n: int
    entries: np.ndarray
    block_word: tuple[int, ...] = (1, 2, 3, 4)

    def __post_init__(self) -> None:
        shape = (2 * self.n + 2, 4 * self.n + 3)
        if self.entries.shape != shape:
            raise InvalidSystemError(f"entries must have shape {shape}, got {self.entries.shape}")
        if sorted(self.block_word) != [1, 2, 3, 4]:
            raise InvalidSystemError(f"block word {self.block_word} is not a permutation of 1..4")

    def width(self, block: int) -> int:
        return self.n if block == 4 else self.n + 1

    def column_offset(self, block: int) -> int:
        pos = self.block_word.index(block)
        return sum(self.width(b) for b in self.block_word[:pos])

    def sub(self, key: Key) -> np.ndarray:
        block, bottom = key
        r0 = self.n + 1 if bottom else 0
        c0 = self.column_offset(block)
        return self.entries[r0 : r0 + self.n + 1, c0 : c0 + self.width(block)]


def canonical_rep(order: int) -> TetradMatrix:
    """Top blocks [I | 0 | I | I with a zero first row],
    bottom blocks [0 | I | I | I with a zero last row]."""
    if order < 2:
        raise ValueError("order must be at least 2")
    n = order
    eye = np.eye(n + 1, dtype=np.int8)
    zero = np.zeros((n + 1, n + 1), dtype=np.int8)
    shifted_down = np.vstack([np.zeros((1, n), dtype=np.int8), np.eye(n, dtype=np.int8)])
    shifted_up = np.vstack([np.eye(n, dtype=np.int8), np.zeros((1, n), dtype=np.int8)])
    top = np.hstack([eye, zero, eye, shifted_down])
    bottom = np.hstack([zero, eye, eye, shifted_up])
    return TetradMatrix(n, np.vstack([top, bottom]))


def defect(dims) -> int:
    """Sum of dim U1..U4 minus twice dim U0."""
    u0, *rest = dims
    if len(rest) != 4:
        raise ValueError("expected five dimensions U0..U4")
    return sum(rest) - 2 * u0


@dataclass(frozen=True)
class CycleSystem:
    """Pivots per sub-matrix (row -> column), fixed rows and the fixed prefix rows.

    ``start_row``: row of A1 holding the first vertex.  ``blocked_top``: row of
    A4 without pivots.  ``blocked_bottom``: row of A4' without pivots.
    ``prefix_bottom`` and ``prefix_top`` are the rows reached by the first
    two vertical arrows.
    """

    matrix: TetradMatrix
    pivots: Mapping[Key, Mapping[int, int]]
    start_row: int
    blocked_top: int
    blocked_bottom: int
    prefix_bottom: int
    prefix_top: int

    def __post_init__(self) -> None:
        n = self.matrix.n
        rows = set(range(1, n + 2))
        for key in SUBMATRICES:
            piv = self.pivots.get(key)
            if piv is None:
                raise InvalidSystemError(f"missing pivots for {_name(key)}")
            width = self.matrix.width(key[0])
            if len(set(piv.values())) != len(piv) or not set(piv) <= rows:
                raise InvalidSystemError(f"pivots of {_name(key)} share a row or column")
            if not all(1 <= c <= width for c in piv.values()):
                raise InvalidSystemError(f"pivot column out of range in {_name(key)}")
            if len(piv) != width:
                raise InvalidSystemError(f"{_name(key)} needs {width} pivots")
        if self.blocked_top in self.pivots[(4, False)]:
            raise InvalidSystemError("blocked row of A4 carries a pivot")
        if self.blocked_bottom in self.pivots[(4, True)]:
            raise InvalidSystemError("blocked row of A4' carries a pivot")
        for r in (self.start_row, self.prefix_bottom, self.prefix_top):
            if r not in rows:
                raise InvalidSystemError(f"row {r} out of range")

    @property
    def n(self) -> int:
        return self.matrix.n

    def is_pivot(self, v: Vertex) -> bool:
        return self.pivots[(v.block, v.bottom)].get(v.row) == v.col

    def pivot_in_row(self, key: Key, row: int) -> Vertex | None:
        col = self.pivots[key].get(row)
        return None if col is None else Vertex(key[0], key[1], row, col)


def canonical_system(order: int) -> CycleSystem:
    """Diagonal pivots, subdiagonal pivots in A4, diagonal pivots in A4'."""
    n = order
    mat = canonical_rep(order)
    diag = {r: r for r in range(1, n + 2)}
    pivots: dict[Key, dict[int, int]] = {}
    for bottom in (False, True):
        for block in (1, 2, 3):
            pivots[(block, bottom)] = dict(diag)
    pivots[(4, False)] = {r + 1: r for r in range(1, n + 1)}
    pivots[(4, True)] = {r: r for r in range(1, n + 1)}
    return CycleSystem(mat, pivots, start_row=1, blocked_top=1, blocked_bottom=n + 1,
                       prefix_bottom=2, prefix_top=n + 1)


def random_cycle_system(order: int, seed: int) -> CycleSystem:
    """The canonical system with rows of each half and columns of each block
    relabelled by seeded random permutations."""
    base = canonical_system(order)
    n = base.n
    rng = random.Random(seed)

    def perm(size: int) -> dict[int, int]:
        image = list(range(1, size + 1))
        rng.shuffle(image)
        return dict(zip(range(1, size + 1), image))

    rows = {False: perm(n + 1), True: perm(n + 1)}
    cols = {b: perm(base.matrix.width(b)) for b in (1, 2, 3, 4)}
    pivots = {
        key: {rows[key[1]][r]: cols[key[0]][c] for r, c in base.pivots[key].items()}
        for key in SUBMATRICES
    }
    entries = np.zeros_like(base.matrix.entries)
    mat = TetradMatrix(n, entries)
    for key in SUBMATRICES:
        src = base.matrix.sub(key)
        dst = mat.sub(key)
        for r in range(n + 1):
            for c in range(src.shape[1]):
                dst[rows[key[1]][r + 1] - 1, cols[key[0]][c + 1] - 1] = src[r, c]
    return CycleSystem(
        mat,
        pivots,
        start_row=rows[False][base.start_row],
        blocked_top=rows[False][base.blocked_top],
        blocked_bottom=rows[True][base.blocked_bottom],
        prefix_bottom=rows[True][base.prefix_bottom],
        prefix_top=rows[False][base.prefix_top],
    )


@dataclass(frozen=True, order=True)
class Vertex:
    block: int
    bottom: bool
    row: int
    col: int

    @property
    def key(self) -> Key:
        return (self.block, self.bottom)

    def __str__(self) -> str:
        return f"{'abcd'[self.block - 1]}{chr(39) if self.bottom else ''}{self.row},{self.col}"


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[Vertex, ...]  # 13 entries, last equals first

    @property
    def arrows(self) -> tuple[tuple[str, Vertex, Vertex], ...]:
        out = []
        for k, (u, v) in enumerate(zip(self.vertices, self.vertices[1:])):
            out.append(("V" if k % 2 == 0 else "H", u, v))
        return tuple(out)

    @property
    def choices(self) -> tuple[int, int, int]:
        """Rows picked freely: third, fourth and fifth vertical landing rows."""
        return (self.vertices[5].row, self.vertices[7].row, self.vertices[9].row)

    def to_dict(self) -> dict:
        return {
            "vertices": [str(v) for v in self.vertices],
            "arrows": [{"kind": k, "from": str(u), "to": str(v)} for k, u, v in self.arrows],
        }


# Skeleton: (kind, target sub-matrix, row rule).  Row rules for vertical
# arrows name the fixed row to reach, or None for a free choice.
_SKELETON: tuple[tuple[str, Key, str | None], ...] = (
    ("V", (1, True), "prefix_bottom"),
    ("H", (2, True), None),
    ("V", (2, False), "prefix_top"),
    ("H", (3, False), None),
    ("V", (3, True), None),
    ("H", (4, True), None),
    ("V", (4, False), None),
    ("H", (3, False), None),
    ("V", (3, True), None),
    ("H", (2, True), None),
    ("V", (2, False), "start_row"),
    ("H", (1, False), None),
)


def _require_supported(system: CycleSystem) -> None:
    mat = system.matrix
    if tuple(mat.block_word) != (1, 2, 3, 4):
        raise UnsupportedInputError("only the identity block word is enumerated")
    ref = canonical_rep(mat.n)
    for key in SUBMATRICES:
        sub = mat.sub(key)
        if not np.isin(sub, (0, 1)).all():
            raise UnsupportedInputError(f"{_name(key)} has entries other than 0 and 1")
        if (sub.sum(axis=0) > 1).any() or (sub.sum(axis=1) > 1).any():
            raise UnsupportedInputError(f"{_name(key)} is not a partial permutation matrix")
        if sub.sum() != ref.sub(key).sum():
            raise UnsupportedInputError(f"{_name(key)} does not have the canonical rank")


def enumerate_cycles(system: CycleSystem) -> list[Cycle]:
    """All cycles of the system, free rows tried in ascending order."""
    _require_supported(system)
    n = system.n
    start = system.pivot_in_row((1, False), system.start_row)
    if start is None:
        raise InvalidSystemError("start row of A1 has no pivot")
    out: list[Cycle] = []
    path = [start]
    root_index = 4

    def allowed(v: Vertex) -> bool:
        if v.key == (4, True) and v.row == system.blocked_bottom:
            return False
        return True

    def step(k: int) -> None:
        if k == len(_SKELETON):
            if path[-1] == start:
                out.append(Cycle(tuple(path)))
            return
        kind, key, rule = _SKELETON[k]
        here = path[-1]
        if kind == "H":
            if key == (4, False) and here.row == system.blocked_top:
                return
            land = system.pivot_in_row(key, here.row)
            if land is None or not allowed(land):
                return
            if k == len(_SKELETON) - 1:
                if land != start:
                    return
            elif len(path) > root_index and land == path[root_index]:
                return
            path.append(land)
            step(k + 1)
            path.pop()
            return
        rows = [getattr(system, rule)] if rule else range(1, n + 2)
        for row in rows:
            v = Vertex(key[0], key[1], row, here.col)
            if system.is_pivot(v) or not allowed(v):
                continue
            path.append(v)
            step(k + 1)
            path.pop()

    step(0)
    return out


def check_cycle(system: CycleSystem, cycle: Cycle) -> list[str]:
    """Independent structural check; returns the list of broken rules.

    Enforced: closure, 12 alternating arrows starting with a downward
    vertical in block 1, the fixed five-vertex prefix, pivots at every
    horizontal landing, exterior entries at every vertical landing,
    adjacency of blocks along horizontals, one vertical in block 1 (down)
    and one in block 4 (up), the blocked rows of blocks 4 and 4', and a
    single visit to the root pivot.  Rows and columns of a sub-matrix may
    otherwise repeat across the two halves of the walk.
    """
    problems = []
    vs = cycle.vertices
    if len(vs) != 13 or vs[0] != vs[-1]:
        return ["cycle is not a closed walk of 12 arrows"]
    start = system.pivot_in_row((1, False), system.start_row)
    first_b = system.pivot_in_row((2, True), system.prefix_bottom)
    root = system.pivot_in_row((3, False), system.prefix_top)
    if start is None or first_b is None or root is None:
        return ["system lacks the pivots of the fixed prefix"]
    prefix = (
        start,
        Vertex(1, True, system.prefix_bottom, start.col),
        first_b,
        Vertex(2, False, system.prefix_top, first_b.col),
        root,
    )
    if vs[:5] != prefix:
        problems.append("fixed prefix differs")
    for k, (kind, u, v) in enumerate(cycle.arrows):
        if kind == "V":
            if u.block != v.block or u.col != v.col or u.bottom == v.bottom:
                problems.append(f"arrow {k + 1} is not vertical")
            if not system.is_pivot(u) or system.is_pivot(v):
                problems.append(f"vertical arrow {k + 1} is not pivot to exterior")
        else:
            if u.bottom != v.bottom or u.row != v.row or abs(u.block - v.block) != 1:
                problems.append(f"arrow {k + 1} is not a horizontal between adjacent blocks")
            if not system.is_pivot(v):
                problems.append(f"horizontal arrow {k + 1} does not land on a pivot")
            if v.key == (4, False) and v.row == system.blocked_top:
                problems.append("horizontal lands in the blocked row of A4")
    if cycle.arrows[0][1].key != (1, False) or cycle.arrows[0][2].key != (1, True):
        problems.append("first arrow is not the downward vertical of block 1")
    verticals = [(u, v) for kind, u, v in cycle.arrows if kind == "V"]
    b1 = [(u, v) for u, v in verticals if u.block == 1]
    b4 = [(u, v) for u, v in verticals if u.block == 4]
    if len(b1) != 1 or len(b4) != 1:
        problems.append("blocks 1 and 4 need exactly one vertical arrow each")
    elif not (not b1[0][0].bottom and b4[0][0].bottom):
        problems.append("outer verticals do not run in opposite directions")
    if any(v.key == (4, True) and v.row == system.blocked_bottom for v in vs):
        problems.append("cycle uses the blocked row of A4'")
    if vs[:-1].count(root) != 1:
        problems.append("root pivot visited more than once")
    return problems


def cycle_count_formula(i: int) -> int:
    if i < 1:
        raise ValueError("i must be positive")
    return i**3 + (i + 1) ** 2


@dataclass
class TreeNode:
    label: str
    children: list[TreeNode] = field(default_factory=list)

    def leaves(self) -> int:
        return 1 if not self.children else sum(c.leaves() for c in self.children)

    def level_sizes(self) -> list[int]:
        sizes, level = [], [self]
        while level:
            sizes.append(len(level))
            level = [c for node in level for c in node.children]
        return sizes


def choice_tree(order: int) -> TreeNode:
    """Choice tree rooted at the fixed pivot of block 3.

    Child i (i = 1..n) has n-1 children when i < n and n when i = n; each
    grandchild has n-1 leaves except the one in row 1, which has n.
    Built from these counting rules alone, independently of the walk.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    n = order
    root = TreeNode(f"c{n + 1},{n + 1}")
    for i in range(1, n + 1):
        child = TreeNode(f"c'{i},{n + 1}")
        rows = [r for r in range(1, n + 1) if r != i + 1]
        rows.sort(key=lambda r: (r == 1, -r))
        for r in rows:
            grand = TreeNode(f"d{r},{i}")
            leaf_count = n if r == 1 else n - 1
            grand.children = [TreeNode(f"leaf{t}") for t in range(1, leaf_count + 1)]
            child.children.append(grand)
        root.children.append(child)
    return root


def render_cycle(system: CycleSystem, cycle: Cycle) -> str:
    """ASCII overlay on the 8-block grid: visit order in each cell."""
    mat = system.matrix
    n = mat.n
    grid = [["." for _ in range(mat.entries.shape[1])] for _ in range(2 * n + 2)]
    for key in SUBMATRICES:
        r0 = n + 1 if key[1] else 0
        c0 = mat.column_offset(key[0])
        for r, c in system.pivots[key].items():
            grid[r0 + r - 1][c0 + c - 1] = "*"
    for k, v in enumerate(cycle.vertices[:-1]):
        r0 = n + 1 if v.bottom else 0
        c0 = mat.column_offset(v.block)
        cell = grid[r0 + v.row - 1][c0 + v.col - 1]
        label = str(k)
        grid[r0 + v.row - 1][c0 + v.col - 1] = label if cell in ".*" else cell + "/" + label
    width = max(len(c) for row in grid for c in row)
    bounds = {mat.column_offset(b) for b in (2, 3, 4)}
    lines = []
    for r, row in enumerate(grid):
        if r == n + 1:
            lines.append("-" * len(lines[-1]))
        cells = []
        for c, cell in enumerate(row):
            if c in bounds:
                cells.append("|")
            cells.append(cell.rjust(width))
        lines.append(" ".join(cells))
    return "\n".join(lines)
