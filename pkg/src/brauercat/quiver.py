"""Quiver of a Brauer configuration, special cycles, relations and DOT export."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Literal

from .config import BrauerConfiguration

__all__ = [
    "LoopConvention",
    "QuiverArrow",
    "BrauerQuiver",
    "SpecialCycle",
    "Relation",
    "build_quiver",
    "special_cycles",
    "relations",
    "export_dot",
    "quiver_to_dict",
    "MAX_ARROWS",
]

LoopConvention = Literal["wrap", "no-wrap"]
LOOP_CONVENTIONS: tuple[str, ...] = ("wrap", "no-wrap")

# refuse to materialize larger quivers; invariants work without them
MAX_ARROWS = 2_000_000


def check_convention(loops: str) -> str:
    if loops not in LOOP_CONVENTIONS:
        raise ValueError(f"unknown loop convention {loops!r}; expected one of {LOOP_CONVENTIONS}")
    return loops


@dataclass(frozen=True)
class QuiverArrow:
    source: str
    target: str
    vertex: str
    step: int

    @property
    def id(self) -> str:
        return f"{self.vertex}:{self.step}"

    @property
    def is_loop(self) -> bool:
        return self.source == self.target


@dataclass(frozen=True)
class BrauerQuiver:
    nodes: tuple[str, ...]
    arrows: tuple[QuiverArrow, ...]
    loop_census: dict[str, int]
    convention: str = "wrap"

    @property
    def loop_count(self) -> int:
        return sum(self.loop_census.values())

    def arrows_of(self, vertex: str) -> tuple[QuiverArrow, ...]:
        """The ring of arrows labelled by ``vertex``, in step order."""
        return self._rings.get(vertex, ())

    @property
    def _rings(self) -> dict[str, tuple[QuiverArrow, ...]]:
        rings = self.__dict__.get("_rings_cache")
        if rings is None:
            grouped: dict[str, list[QuiverArrow]] = {}
            for a in self.arrows:
                grouped.setdefault(a.vertex, []).append(a)
            rings = {v: tuple(sorted(arrs, key=lambda a: a.step)) for v, arrs in grouped.items()}
            object.__setattr__(self, "_rings_cache", rings)
        return rings

    def out_degree(self, node: str) -> int:
        return sum(1 for a in self.arrows if a.source == node)

    def in_degree(self, node: str) -> int:
        return sum(1 for a in self.arrows if a.target == node)


def build_quiver(
    cfg: BrauerConfiguration, loops: str = "wrap", max_arrows: int = MAX_ARROWS
) -> BrauerQuiver:
    """One node per polygon and one arrow per (nontruncated vertex, step).

    Step ``k`` of vertex ``a`` joins the polygon of the k-th entry of its
    successor sequence to the polygon of the next one; the last step wraps.
    ``loops`` only affects the census: under ``no-wrap`` the wrap arrow of a
    vertex living in a single polygon is not counted as a loop.
    """
    check_convention(loops)
    total = sum(cfg.valency(v) for v in cfg.nontruncated())
    if total > max_arrows:
        raise ValueError(
            f"quiver would have {total} arrows (limit {max_arrows}); use the arithmetic invariants"
        )
    arrows = []
    census = {pid: 0 for pid in cfg.polygon_ids}
    for vid in cfg.nontruncated():
        seq = cfg.successor(vid)
        steps = [pid for pid, _ in seq.steps()]
        single = len(seq.blocks) == 1
        val = len(steps)
        for k in range(val):
            src, dst = steps[k], steps[(k + 1) % val]
            arrow = QuiverArrow(src, dst, vid, k + 1)
            arrows.append(arrow)
            if src == dst and not (loops == "no-wrap" and single and k == val - 1):
                census[src] += 1
    return BrauerQuiver(tuple(cfg.polygon_ids), tuple(arrows), census, loops)


@dataclass(frozen=True)
class SpecialCycle:
    """The rotation of a vertex's arrow ring starting at one occurrence."""

    vertex: str
    start: tuple[str, int]
    offset: int
    ring: tuple[QuiverArrow, ...]

    def __len__(self) -> int:
        return len(self.ring)

    @property
    def arrows(self) -> tuple[QuiverArrow, ...]:
        return self.ring[self.offset:] + self.ring[: self.offset]

    @property
    def polygon(self) -> str:
        return self.start[0]

    def power(self, exponent: int) -> tuple[str, ...]:
        return tuple(a.id for a in self.arrows) * exponent

    def iter_power(self, exponent: int) -> Iterator[QuiverArrow]:
        n = len(self.ring)
        for i in range(n * exponent):
            yield self.ring[(self.offset + i) % n]


def special_cycles(quiver: BrauerQuiver, cfg: BrauerConfiguration) -> list[SpecialCycle]:
    out = []
    for vid in cfg.nontruncated():
        ring = quiver.arrows_of(vid)
        for offset, step in enumerate(cfg.successor(vid).steps()):
            out.append(SpecialCycle(vid, step, offset, ring))
    return out


@dataclass(frozen=True)
class Relation:
    """``kind`` is I, II or III; ``paths`` holds one or two arrow-id sequences."""

    kind: str
    paths: tuple[tuple[str, ...], ...]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "paths": [list(p) for p in self.paths]}


def relations(quiver: BrauerQuiver, cfg: BrauerConfiguration) -> list[Relation]:
    """Generators of the admissible ideal, as data (no minimization).

    Type I pairs every two distinct special cycles at the same polygon,
    including two copies of one vertex in that polygon.
    """
    cycles = special_cycles(quiver, cfg)
    out: list[Relation] = []
    seen: set[Relation] = set()

    def emit(rel: Relation) -> None:
        if rel not in seen:
            seen.add(rel)
            out.append(rel)

    at_polygon: dict[str, list[SpecialCycle]] = {}
    for c in cycles:
        at_polygon.setdefault(c.polygon, []).append(c)
    for pid in quiver.nodes:
        for c1, c2 in combinations(at_polygon.get(pid, []), 2):
            p1 = c1.power(cfg.multiplicity(c1.vertex))
            p2 = c2.power(cfg.multiplicity(c2.vertex))
            emit(Relation("I", tuple(sorted((p1, p2)))))
    for c in cycles:
        path = c.power(cfg.multiplicity(c.vertex)) + (c.arrows[0].id,)
        emit(Relation("II", (path,)))
    # two-arrow paths allowed only as consecutive arrows of one ring
    successor = {}
    for vid in cfg.nontruncated():
        ring = quiver.arrows_of(vid)
        for i, a in enumerate(ring):
            successor[a] = ring[(i + 1) % len(ring)]
    by_source: dict[str, list[QuiverArrow]] = {}
    for b in quiver.arrows:
        by_source.setdefault(b.source, []).append(b)
    for a in quiver.arrows:
        for b in by_source.get(a.target, []):
            if successor[a] == b:
                continue
            emit(Relation("III", ((a.id, b.id),)))
    return out


def quiver_to_dict(quiver: BrauerQuiver) -> dict:
    return {
        "nodes": list(quiver.nodes),
        "arrows": [
            {"id": a.id, "source": a.source, "target": a.target, "vertex": a.vertex, "step": a.step}
            for a in quiver.arrows
        ],
        "loops": dict(quiver.loop_census),
        "convention": quiver.convention,
    }


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(quiver: BrauerQuiver, collapse: bool = False) -> str:
    """Deterministic DOT text.

    With ``collapse`` parallel arrows of the same vertex between the same
    nodes become one edge labelled ``vertex x count``.
    """
    lines = ["digraph brauer_quiver {"]
    for node in quiver.nodes:
        lines.append(f"  {_quote(node)};")
    if not collapse:
        for a in quiver.arrows:
            lines.append(f"  {_quote(a.source)} -> {_quote(a.target)} [label={_quote(a.id)}];")
    else:
        counts: dict[tuple[str, str, str], int] = {}
        for a in quiver.arrows:
            key = (a.source, a.target, a.vertex)
            counts[key] = counts.get(key, 0) + 1
        for (src, dst, vid), m in counts.items():
            lines.append(f"  {_quote(src)} -> {_quote(dst)} [label={_quote(f'{vid} x{m}')}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
