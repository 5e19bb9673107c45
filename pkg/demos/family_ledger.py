#!/usr/bin/env python3
"""Closed-form statements about the families, side by side with the general formulas.

Prints every ledger row whose verdict is not a match, grouped by family.
"""

from __future__ import annotations

import argparse

from brauercat.families import ledger


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sequence", default="catalan")
    args = parser.parse_args()

    for family in ("kn", "gamman", "ej", "dn"):
        report = ledger(family, sequence=args.sequence)
        verdicts = {}
        for row in report.rows:
            verdicts.setdefault(row.claim, set()).add(row.verdict)
        print(f"\n{family}: {len(report.rows)} rows, unexpected {len(report.unexpected())}")
        for claim, seen in verdicts.items():
            print(f"  {claim:<24} {', '.join(sorted(seen))}")
        for row in report.rows:
            if row.verdict != "match":
                g = row.general
                print(f"    {row.parameter:<22} closed {row.closed_form}  "
                      f"wrap {g['wrap']}  no-wrap {g['no-wrap']}")


if __name__ == "__main__":
    main()
