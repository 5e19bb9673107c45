#!/usr/bin/env python3
"""Walk through the two-polygon toy configuration.

Prints the quiver with its special cycles and relations, then the
numeric invariants next to the basis census that checks the dimension.
"""

from __future__ import annotations

from pathlib import Path

from brauercat import load_configuration, validate
from brauercat.invariants import basis_census, invariants_report
from brauercat.quiver import build_quiver, export_dot, relations, special_cycles

TOY = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "toy.json"


def main() -> None:
    cfg = load_configuration(TOY)
    report = validate(cfg)
    print(f"valid: {report.ok}  connected: {report.connected}")
    for poly in cfg.polygons:
        print(f"  {poly.id}: " + " ".join(f"{v}^{c}" for v, c in poly.occurrences))

    q = build_quiver(cfg)
    print(f"\nquiver: {len(q.nodes)} vertices, {len(q.arrows)} arrows, loops {dict(q.loop_census)}")
    print(export_dot(q))

    print("special cycles:")
    for c in special_cycles(q, cfg):
        print(f"  {c.vertex} at {c.polygon}: " + " ".join(a.id for a in c.arrows))

    rels = relations(q, cfg)
    for kind in ("I", "II", "III"):
        print(f"relations of type {kind}: {sum(r.kind == kind for r in rels)}")

    inv = invariants_report(cfg)
    print(f"\ndimension {inv['dimension']} (census {basis_census(cfg)})")
    print(f"center dimension {inv['center_dimension']}")
    print(f"hearts {inv['hearts']}")


if __name__ == "__main__":
    main()
