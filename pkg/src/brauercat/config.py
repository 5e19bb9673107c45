"""Brauer configurations: data model, validation, valency and reduction.

A configuration is a set of vertices with multiplicities, a list of polygons
(multisets of vertices) and, per vertex, a cyclic order on its occurrences.
Orientations are stored compactly as ordered blocks ``(polygon, count)``
because every copy of a polygon occupies one contiguous stretch of a
successor sequence.  This keeps factorial-sized families tractable.
"""

from __future__ import annotations

import json
import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Iterable, Iterator, Mapping, Sequence

__all__ = [
    "ConfigurationError",
    "VertexDecl",
    "Polygon",
    "SuccessorSequence",
    "BrauerConfiguration",
    "Violation",
    "ValidationReport",
    "validate",
    "valency",
    "is_truncated",
    "is_connected",
    "reduce",
    "reduce_with_report",
    "load_configuration",
    "configuration_from_dict",
    "configuration_to_dict",
    "random_configuration",
]


class ConfigurationError(ValueError):
    """Structural problem in a configuration (as opposed to an axiom violation)."""


@dataclass(frozen=True)
class VertexDecl:
    id: str
    multiplicity: int = 1

    def __post_init__(self) -> None:
        if not isinstance(self.multiplicity, int) or self.multiplicity < 1:
            raise ConfigurationError(
                f"vertex {self.id!r}: multiplicity must be a positive integer, got {self.multiplicity!r}"
            )


@dataclass(frozen=True)
class Polygon:
    """A polygon; ``occurrences`` keeps declaration order as (vertex, count) pairs."""

    id: str
    occurrences: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        seen = set()
        for vid, count in self.occurrences:
            if vid in seen:
                raise ConfigurationError(f"polygon {self.id!r}: vertex {vid!r} listed twice")
            seen.add(vid)
            if not isinstance(count, int) or count < 1:
                raise ConfigurationError(
                    f"polygon {self.id!r}: occurrence of {vid!r} must be a positive integer"
                )

    @classmethod
    def of(cls, pid: str, occurrences: Mapping[str, int] | Iterable[tuple[str, int]]) -> Polygon:
        items = occurrences.items() if isinstance(occurrences, Mapping) else occurrences
        return cls(str(pid), tuple((str(v), c) for v, c in items))

    def occ(self, vertex: str) -> int:
        for vid, count in self.occurrences:
            if vid == vertex:
                return count
        return 0

    @property
    def size(self) -> int:
        """Total occurrence count."""
        return sum(c for _, c in self.occurrences)

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.occurrences)


@dataclass(frozen=True)
class SuccessorSequence:
    """Cyclic order of a vertex's occurrences, as contiguous polygon blocks.

    ``blocks = (("U", 2), ("V", 1))`` stands for the steps
    ``(U,1) < (U,2) < (V,1)`` followed by the wrap back to ``(U,1)``.
    """

    vertex: str
    blocks: tuple[tuple[str, int], ...]

    def __len__(self) -> int:
        return sum(c for _, c in self.blocks)

    def steps(self) -> Iterator[tuple[str, int]]:
        for pid, count in self.blocks:
            for k in range(1, count + 1):
                yield (pid, k)

    @property
    def polygon_order(self) -> tuple[str, ...]:
        return tuple(p for p, _ in self.blocks)

    @classmethod
    def from_steps(cls, vertex: str, steps: Sequence[Sequence]) -> SuccessorSequence:
        """Compress an explicit list of ``(polygon, occurrence_index)`` pairs.

        Copies of a polygon must appear as one block with indices 1, 2, ...
        in increasing order.  A cyclic rotation that splits a block is
        rejected; callers should start the list at a block boundary.
        """
        blocks: list[list] = []
        seen: set[str] = set()
        for raw in steps:
            if len(raw) != 2:
                raise ConfigurationError(f"vertex {vertex!r}: malformed step {raw!r}")
            pid, k = str(raw[0]), raw[1]
            if not isinstance(k, int):
                raise ConfigurationError(f"vertex {vertex!r}: occurrence index {k!r} is not an integer")
            if blocks and blocks[-1][0] == pid:
                if k != blocks[-1][1] + 1:
                    raise ConfigurationError(
                        f"vertex {vertex!r}: occurrences of {pid!r} out of order at index {k}"
                    )
                blocks[-1][1] = k
                continue
            if pid in seen:
                raise ConfigurationError(
                    f"vertex {vertex!r}: copies of polygon {pid!r} are not contiguous"
                )
            if k != 1:
                raise ConfigurationError(
                    f"vertex {vertex!r}: block of {pid!r} must start at occurrence 1, got {k}"
                )
            seen.add(pid)
            blocks.append([pid, 1])
        return cls(vertex, tuple((p, c) for p, c in blocks))


@dataclass(frozen=True)
class BrauerConfiguration:
    vertices: tuple[VertexDecl, ...]
    polygons: tuple[Polygon, ...]
    orientation: tuple[SuccessorSequence, ...] = field(default=())

    def __post_init__(self) -> None:
        vids = [v.id for v in self.vertices]
        if len(set(vids)) != len(vids):
            raise ConfigurationError(f"duplicate vertex ids: {_dupes(vids)}")
        pids = [p.id for p in self.polygons]
        if len(set(pids)) != len(pids):
            raise ConfigurationError(f"duplicate polygon ids: {_dupes(pids)}")
        known = set(vids)
        for poly in self.polygons:
            for vid, _ in poly.occurrences:
                if vid not in known:
                    raise ConfigurationError(f"polygon {poly.id!r} references unknown vertex {vid!r}")
        # synthesize missing successor sequences, then check the given ones
        given = {}
        for seq in self.orientation:
            if seq.vertex not in known:
                raise ConfigurationError(f"orientation given for unknown vertex {seq.vertex!r}")
            if seq.vertex in given:
                raise ConfigurationError(f"two orientations given for vertex {seq.vertex!r}")
            given[seq.vertex] = seq
        where: dict[str, dict[str, int]] = {vid: {} for vid in vids}
        for poly in self.polygons:
            for vid, count in poly.occurrences:
                where[vid][poly.id] = count
        full = []
        for vid in vids:
            expected = where[vid]
            seq = given.get(vid)
            if seq is None:
                seq = SuccessorSequence(vid, tuple(expected.items()))
            else:
                got = dict(seq.blocks)
                if len(got) != len(seq.blocks) or got != expected:
                    raise ConfigurationError(
                        f"orientation of {vid!r} does not cover its occurrences exactly: "
                        f"expected {expected}, got {dict(seq.blocks)}"
                    )
            full.append(seq)
        object.__setattr__(self, "orientation", tuple(full))

    # lookups -------------------------------------------------------------

    @cached_property
    def _vertex_index(self) -> dict[str, VertexDecl]:
        return {v.id: v for v in self.vertices}

    @cached_property
    def _polygon_index(self) -> dict[str, Polygon]:
        return {p.id: p for p in self.polygons}

    @cached_property
    def _valency(self) -> dict[str, int]:
        val = {v.id: 0 for v in self.vertices}
        for poly in self.polygons:
            for vid, count in poly.occurrences:
                val[vid] += count
        return val

    @cached_property
    def _successor_index(self) -> dict[str, SuccessorSequence]:
        return {s.vertex: s for s in self.orientation}

    def vertex(self, vid: str) -> VertexDecl:
        try:
            return self._vertex_index[vid]
        except KeyError:
            raise KeyError(f"unknown vertex {vid!r}") from None

    def polygon(self, pid: str) -> Polygon:
        try:
            return self._polygon_index[pid]
        except KeyError:
            raise KeyError(f"unknown polygon {pid!r}") from None

    def successor(self, vid: str) -> SuccessorSequence:
        self.vertex(vid)
        return self._successor_index[vid]

    def multiplicity(self, vid: str) -> int:
        return self.vertex(vid).multiplicity

    def valency(self, vid: str) -> int:
        self.vertex(vid)
        return self._valency[vid]

    def is_truncated(self, vid: str) -> bool:
        return self.valency(vid) * self.multiplicity(vid) == 1

    @property
    def vertex_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertices)

    @property
    def polygon_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.polygons)

    def nontruncated(self) -> list[str]:
        return [v for v in self.vertex_ids if not self.is_truncated(v)]

    def has_default_orientation(self) -> bool:
        for vid in self.vertex_ids:
            expected = tuple((p.id, p.occ(vid)) for p in self.polygons if p.occ(vid))
            if self.successor(vid).blocks != expected:
                return False
        return True


def _dupes(items: Sequence[str]) -> list[str]:
    seen, dup = set(), []
    for x in items:
        if x in seen and x not in dup:
            dup.append(x)
        seen.add(x)
    return dup


# validation ---------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    axiom: str
    obj: str
    message: str


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]
    connected: bool
    notes: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "connected": self.connected,
            "violations": [
                {"axiom": v.axiom, "object": v.obj, "message": v.message} for v in self.violations
            ],
            "notes": list(self.notes),
        }


def validate(cfg: BrauerConfiguration) -> ValidationReport:
    """Check the configuration axioms.

    Structural errors (duplicate ids, bad orientation data) are raised when
    the configuration is built; this reports the remaining axioms B5-B7.
    """
    out = []
    for vid in cfg.vertex_ids:
        if cfg.valency(vid) == 0:
            out.append(Violation("B5", vid, f"vertex {vid!r} occurs in no polygon"))
    for poly in cfg.polygons:
        if poly.size < 2:
            out.append(Violation("B6", poly.id, f"polygon {poly.id!r} has {poly.size} occurrence(s)"))
        if not any(cfg.valency(v) * cfg.multiplicity(v) > 1 for v in poly.vertex_ids):
            out.append(
                Violation("B7", poly.id, f"polygon {poly.id!r} has no vertex with val*mu > 1")
            )
    notes = []
    _, flagged = reduce_with_report(cfg)
    for vid, pid in flagged:
        notes.append(f"truncated vertex {vid!r} kept in 2-element polygon {pid!r}")
    return ValidationReport(tuple(out), is_connected(cfg), tuple(notes))


def valency(cfg: BrauerConfiguration, vertex: str) -> int:
    return cfg.valency(vertex)


def is_truncated(cfg: BrauerConfiguration, vertex: str) -> bool:
    return cfg.is_truncated(vertex)


def is_connected(cfg: BrauerConfiguration) -> bool:
    """Whether the polygon-incidence graph (shared vertex = edge) is connected."""
    if not cfg.polygons:
        return True
    by_vertex: dict[str, list[str]] = {}
    for poly in cfg.polygons:
        for vid in poly.vertex_ids:
            by_vertex.setdefault(vid, []).append(poly.id)
    start = cfg.polygons[0].id
    seen = {start}
    queue = deque([start])
    while queue:
        pid = queue.popleft()
        for vid in cfg.polygon(pid).vertex_ids:
            for other in by_vertex[vid]:
                if other not in seen:
                    seen.add(other)
                    queue.append(other)
    return len(seen) == len(cfg.polygons)


def components(cfg: BrauerConfiguration) -> list[list[str]]:
    """Polygon ids grouped by connected component, in declaration order."""
    parent = {p: p for p in cfg.polygon_ids}

    def find(x: str) -> str:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[str, str] = {}
    for poly in cfg.polygons:
        for vid in poly.vertex_ids:
            if vid in owner:
                parent[find(poly.id)] = find(owner[vid])
            else:
                owner[vid] = poly.id
    groups: dict[str, list[str]] = {}
    for pid in cfg.polygon_ids:
        groups.setdefault(find(pid), []).append(pid)
    return list(groups.values())


# reduction ----------------------------------------------------------------


def reduce_with_report(cfg: BrauerConfiguration) -> tuple[BrauerConfiguration, list[tuple[str, str]]]:
    """Remove truncated vertices from polygons with at least three occurrences.

    Returns the reduced configuration together with the (vertex, polygon)
    pairs of truncated vertices that had to stay because their polygon has
    only two occurrences.
    """
    polys = {p.id: dict(p.occurrences) for p in cfg.polygons}
    removed: set[str] = set()
    changed = True
    while changed:
        changed = False
        for poly in cfg.polygons:
            occ = polys[poly.id]
            for vid in list(occ):
                if vid in removed or cfg.multiplicity(vid) != 1 or cfg.valency(vid) != 1:
                    continue
                if sum(occ.values()) >= 3:
                    del occ[vid]
                    removed.add(vid)
                    changed = True
    flagged = []
    for poly in cfg.polygons:
        for vid in polys[poly.id]:
            if cfg.is_truncated(vid):
                flagged.append((vid, poly.id))
    if not removed:
        return cfg, flagged
    reduced = BrauerConfiguration(
        tuple(v for v in cfg.vertices if v.id not in removed),
        tuple(Polygon(p.id, tuple(polys[p.id].items())) for p in cfg.polygons),
        tuple(s for s in cfg.orientation if s.vertex not in removed),
    )
    return reduced, flagged


def reduce(cfg: BrauerConfiguration) -> BrauerConfiguration:
    return reduce_with_report(cfg)[0]


# JSON interchange ---------------------------------------------------------


def configuration_from_dict(data: Mapping) -> BrauerConfiguration:
    try:
        vertices = tuple(
            VertexDecl(str(v["id"]), v.get("multiplicity", 1)) for v in data["vertices"]
        )
        polygons = tuple(Polygon.of(p["id"], p["occurrences"]) for p in data["polygons"])
        orientation = tuple(
            SuccessorSequence.from_steps(str(vid), steps)
            for vid, steps in (data.get("orientation") or {}).items()
        )
    except (KeyError, TypeError, AttributeError) as exc:
        raise ConfigurationError(f"malformed configuration: {exc!r}") from exc
    _check_indices(polygons, data.get("orientation") or {})
    return BrauerConfiguration(vertices, polygons, orientation)


def _check_indices(polygons: Sequence[Polygon], raw: Mapping) -> None:
    occ = {p.id: p for p in polygons}
    for vid, steps in raw.items():
        for pid, k in steps:
            poly = occ.get(str(pid))
            if poly is None:
                raise ConfigurationError(f"orientation of {vid!r} references unknown polygon {pid!r}")
            if not 1 <= k <= poly.occ(str(vid)):
                raise ConfigurationError(
                    f"orientation of {vid!r}: occurrence index {k} out of range for polygon {pid!r}"
                )


def configuration_to_dict(cfg: BrauerConfiguration) -> dict:
    out: dict = {
        "vertices": [{"id": v.id, "multiplicity": v.multiplicity} for v in cfg.vertices],
        "polygons": [{"id": p.id, "occurrences": dict(p.occurrences)} for p in cfg.polygons],
    }
    if not cfg.has_default_orientation():
        out["orientation"] = {
            s.vertex: [[pid, k] for pid, k in s.steps()] for s in cfg.orientation
        }
    return out


def load_configuration(source: str | Path | Mapping) -> BrauerConfiguration:
    if isinstance(source, Mapping):
        return configuration_from_dict(source)
    try:
        data = json.loads(Path(source).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"{source}: invalid JSON ({exc})") from exc
    return configuration_from_dict(data)


# random instances for property tests -------------------------------------


def random_configuration(
    seed: int | random.Random,
    max_polygons: int = 4,
    max_occurrence: int = 4,
    max_vertices: int = 5,
    max_multiplicity: int = 3,
) -> BrauerConfiguration:
    """A random valid configuration with a random grouped orientation."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    while True:
        n_poly = rng.randint(1, max_polygons)
        n_vert = rng.randint(1, max_vertices)
        names = [f"v{i}" for i in range(1, n_vert + 1)]
        polys = []
        for i in range(1, n_poly + 1):
            chosen = rng.sample(names, rng.randint(1, n_vert))
            polys.append(Polygon(f"P{i}", tuple((v, rng.randint(1, max_occurrence)) for v in sorted(chosen))))
        used = sorted({v for p in polys for v in p.vertex_ids})
        verts = tuple(
            VertexDecl(v, 1 if rng.random() < 0.6 else rng.randint(2, max_multiplicity)) for v in used
        )
        orientation = []
        for v in used:
            blocks = [(p.id, p.occ(v)) for p in polys if p.occ(v)]
            rng.shuffle(blocks)
            orientation.append(SuccessorSequence(v, tuple(blocks)))
        cfg = BrauerConfiguration(verts, tuple(polys), tuple(orientation))
        if validate(cfg).ok:
            return cfg
