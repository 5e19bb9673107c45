"""Numeric invariants of Brauer configuration algebras.

Everything here is exact integer arithmetic on the configuration data, so
families whose occurrence counts are factorials stay cheap.  The basis
census in :func:`basis_size_check` is a second, independent route to the
dimension that walks special cycles instead of using the closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import BrauerConfiguration, components, is_connected, reduce_with_report, validate
from .quiver import build_quiver, check_convention, special_cycles

__all__ = [
    "PreconditionError",
    "AlgebraInvariants",
    "dimension",
    "center_dimension",
    "center_formula",
    "heart_summands",
    "loop_count",
    "c_gamma",
    "special_cycle_count",
    "basis_size_check",
    "basis_census",
    "compute_invariants",
    "invariants_report",
    "rad2_notes",
]


class PreconditionError(ValueError):
    """The configuration does not meet the hypotheses of a formula."""


def _require_valid(cfg: BrauerConfiguration) -> None:
    report = validate(cfg)
    if not report.ok:
        first = report.violations[0]
        raise PreconditionError(f"invalid configuration: {first.axiom} {first.message}")


def dimension(cfg: BrauerConfiguration) -> int:
    _require_valid(cfg)
    total = 2 * len(cfg.polygons)
    for vid in cfg.nontruncated():
        val = cfg.valency(vid)
        total += val * (cfg.multiplicity(vid) * val - 1)
    return total


def special_cycle_count(cfg: BrauerConfiguration) -> int:
    return sum(cfg.valency(v) for v in cfg.nontruncated())


def loop_count(cfg: BrauerConfiguration, loops: str = "wrap") -> int:
    """Loops of the quiver, counted from successor blocks without building it."""
    check_convention(loops)
    total = 0
    for vid in cfg.nontruncated():
        blocks = cfg.successor(vid).blocks
        if len(blocks) >= 2:
            total += sum(c - 1 for _, c in blocks)
        elif loops == "wrap":
            total += blocks[0][1]
        else:
            total += blocks[0][1] - 1
    return total


def c_gamma(cfg: BrauerConfiguration) -> int:
    """Vertices of valency one and multiplicity above one."""
    return sum(1 for v in cfg.vertex_ids if cfg.valency(v) == 1 and cfg.multiplicity(v) > 1)


def center_formula(cfg: BrauerConfiguration, loops: str = "wrap") -> int:
    """The center-dimension expression, evaluated without checking its hypotheses."""
    return (
        1
        + sum(v.multiplicity for v in cfg.vertices)
        + len(cfg.polygons)
        - len(cfg.vertices)
        + loop_count(cfg, loops)
        - c_gamma(cfg)
    )


def center_dimension(cfg: BrauerConfiguration, loops: str = "wrap") -> int:
    """Center dimension; needs a valid, reduced and connected configuration."""
    _require_valid(cfg)
    if not is_connected(cfg):
        parts = components(cfg)
        raise PreconditionError(
            f"configuration is disconnected: components {parts}"
        )
    reduced, _ = reduce_with_report(cfg)
    if reduced is not cfg:
        gone = sorted(set(cfg.vertex_ids) - set(reduced.vertex_ids))
        raise PreconditionError(f"configuration is not reduced: truncated vertices {gone} removable")
    return center_formula(cfg, loops)


def heart_summands(cfg: BrauerConfiguration, polygon: str) -> int:
    poly = cfg.polygon(polygon)
    return sum(c for v, c in poly.occurrences if not cfg.is_truncated(v))


def rad2_notes(cfg: BrauerConfiguration) -> list[str]:
    """Advisory notes on polygons where the rad^2 hypothesis may fail."""
    notes = []
    for poly in cfg.polygons:
        if all(cfg.is_truncated(v) or cfg.valency(v) == 1 for v in poly.vertex_ids):
            notes.append(
                f"polygon {poly.id!r} has only truncated or valency-1 vertices; "
                "heart and center values assume rad^2 != 0"
            )
    return notes


# basis census --------------------------------------------------------------

# explicit path enumeration above this much work switches to block counting
EXPLICIT_CENSUS_LIMIT = 5_000_000


def _explicit_census(cfg: BrauerConfiguration) -> int:
    quiver = build_quiver(cfg)
    prefixes: set[tuple] = set()
    chosen: dict[str, tuple] = {}
    for cycle in special_cycles(quiver, cfg):
        mu = cfg.multiplicity(cycle.vertex)
        path: tuple = ()
        prefixes.add((cycle.polygon, path))
        for arrow in list(cycle.iter_power(mu))[:-1]:
            path = path + (arrow.id,)
            prefixes.add((cycle.polygon, path))
        chosen.setdefault(cycle.polygon, cycle.power(mu))
    return len(prefixes) + len(chosen)


def _block_census(cfg: BrauerConfiguration) -> int:
    # Each special cycle is fixed by its first arrow, so proper nontrivial
    # prefixes of distinct cycles never coincide; a block of c copies of a
    # polygon in the successor sequence of a contributes c cycles.
    sources: set[str] = set()
    nontrivial = 0
    for vid in cfg.nontruncated():
        val = cfg.valency(vid)
        mu = cfg.multiplicity(vid)
        for pid, count in cfg.successor(vid).blocks:
            sources.add(pid)
            nontrivial += count * (val * mu - 1)
    return len(sources) + nontrivial + len(sources)


def basis_census(cfg: BrauerConfiguration, explicit: bool | None = None) -> int:
    """Size of the basis made of proper prefixes of powered special cycles
    plus one full powered cycle per polygon."""
    if explicit is None:
        work = sum(
            cfg.valency(v) * (cfg.valency(v) * cfg.multiplicity(v)) ** 2 for v in cfg.nontruncated()
        )
        explicit = work <= EXPLICIT_CENSUS_LIMIT
    return _explicit_census(cfg) if explicit else _block_census(cfg)


def basis_size_check(cfg: BrauerConfiguration, explicit: bool | None = None) -> bool:
    return basis_census(cfg, explicit) == dimension(cfg)


# reports ---------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraInvariants:
    dimension: int
    center_dimension: dict[str, int | None]
    hearts: dict[str, int]
    special_cycle_count: int
    loop_count: dict[str, int]
    c_gamma: int
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "center_dimension": {
                "wrap": self.center_dimension["wrap"],
                "noWrap": self.center_dimension["no-wrap"],
            },
            "hearts": dict(self.hearts),
            "specialCycles": self.special_cycle_count,
            "loops": {"wrap": self.loop_count["wrap"], "noWrap": self.loop_count["no-wrap"]},
            "cGamma": self.c_gamma,
            "notes": list(self.notes),
        }


def compute_invariants(cfg: BrauerConfiguration) -> AlgebraInvariants:
    notes = rad2_notes(cfg)
    centers: dict[str, int | None] = {}
    for conv in ("wrap", "no-wrap"):
        try:
            centers[conv] = center_dimension(cfg, conv)
        except PreconditionError as exc:
            centers[conv] = None
            if conv == "wrap":
                notes.append(f"center dimension not defined: {exc}")
    return AlgebraInvariants(
        dimension=dimension(cfg),
        center_dimension=centers,
        hearts={p: heart_summands(cfg, p) for p in cfg.polygon_ids},
        special_cycle_count=special_cycle_count(cfg),
        loop_count={c: loop_count(cfg, c) for c in ("wrap", "no-wrap")},
        c_gamma=c_gamma(cfg),
        notes=notes,
    )


def invariants_report(cfg: BrauerConfiguration) -> dict:
    return compute_invariants(cfg).to_dict()
