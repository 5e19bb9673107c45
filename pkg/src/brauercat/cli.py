"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 input error.
Relative output paths resolve against ``$BRAUERCAT_OUTPUT_DIR`` when set.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import families, fibtriangle, invariants, kronecker, quiver, tetrad
from .config import (
    ConfigurationError,
    configuration_to_dict,
    load_configuration,
    reduce_with_report,
    validate,
)

OK, MISMATCH, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 2 with usage, as argparse does
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def _out_path(path: str) -> Path:
    p = Path(path)
    base = os.environ.get("BRAUERCAT_OUTPUT_DIR")
    if base and not p.is_absolute():
        p = Path(base) / p
    p.parent.mkdir(parents=True, exist_ok=True)
    return p


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, default=str)


def _load(path: str):
    try:
        return load_configuration(path)
    except FileNotFoundError as exc:
        raise InputError(f"no such file: {path}") from exc
    except ConfigurationError as exc:
        raise InputError(str(exc)) from exc


def _csv(rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


# verbs ----------------------------------------------------------------------


def cmd_validate(args) -> int:
    report = validate(_load(args.config))
    print(_dump(report.to_dict()))
    return OK if report.ok else MISMATCH


def cmd_quiver(args) -> int:
    cfg = _load(args.config)
    _require_valid(cfg)
    q = quiver.build_quiver(cfg, loops=args.loops)
    if args.format == "dot":
        sys.stdout.write(quiver.export_dot(q, collapse=args.collapse))
    else:
        print(_dump(quiver.quiver_to_dict(q)))
    return OK


def cmd_relations(args) -> int:
    cfg = _load(args.config)
    _require_valid(cfg)
    q = quiver.build_quiver(cfg)
    rels = quiver.relations(q, cfg)
    if args.format == "csv":
        sys.stdout.write(_csv([["kind", "paths"]] + [
            [r.kind, " - ".join(".".join(p) for p in r.paths)] for r in rels
        ]))
    else:
        print(_dump([r.to_dict() for r in rels]))
    return OK


def cmd_invariants(args) -> int:
    cfg = _load(args.config)
    _require_valid(cfg)
    report = invariants.invariants_report(cfg)
    report["basisCheck"] = invariants.basis_size_check(cfg)
    print(_dump(report))
    return OK if report["basisCheck"] else MISMATCH


def cmd_reduce(args) -> int:
    cfg = _load(args.config)
    reduced, flagged = reduce_with_report(cfg)
    data = configuration_to_dict(reduced)
    text = _dump(data)
    if args.output:
        _out_path(args.output).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    for vid, pid in flagged:
        print(f"kept truncated vertex {vid} in 2-element polygon {pid}", file=sys.stderr)
    return OK


def cmd_family(args) -> int:
    try:
        cfg = families.build_family(args.family, args.n, args.sequence)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    data = configuration_to_dict(cfg)
    if args.emit:
        _out_path(args.emit).write_text(_dump(data) + "\n", encoding="utf-8")
    report = invariants.invariants_report(cfg)
    print(_dump({"family": args.family, "n": args.n, "invariants": report}))
    return OK


def _helix_system(args):
    if args.seed is None:
        return kronecker.canonical_system(args.n)
    return kronecker.random_system(args.n, args.seed)


def cmd_helix(args) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    system = _helix_system(args)
    helices = kronecker.enumerate_helices(system, fixed_start=args.fixed_start)
    expected = kronecker.helix_count(args.n) if args.fixed_start is None else kronecker.a_of_n(args.n)
    match = len(helices) == expected
    seed_note = f"seed={args.seed}" if args.seed is not None else "canonical"
    if args.count_only or args.format == "csv":
        sys.stdout.write(f"# {seed_note}\n" + _csv([["n", "count", "formula", "match"],
                                                  [args.n, len(helices), expected, str(match).lower()]]))
    elif args.format == "ascii":
        print(f"# {seed_note}")
        for k, h in enumerate(helices, start=1):
            print(f"helix {k}: " + " ".join(str(v) for v in h.vertices))
            print(kronecker.render_helix(system, h))
    else:
        print(_dump({"n": args.n, "system": seed_note, "count": len(helices), "formula": expected,
                     "match": match, "helices": [h.to_dict() for h in helices]}))
    return OK if match else MISMATCH


def cmd_words(args) -> int:
    if args.n < 1:
        raise InputError("--n must be positive")
    ws = kronecker.words(args.n)
    if args.format == "csv":
        sys.stdout.write(_csv([["word", "partition", "size"]] + [
            [w, " ".join(map(str, kronecker.word_to_partition(w))), sum(kronecker.word_to_partition(w))]
            for w in ws
        ]))
    else:
        print(_dump([{"word": w, "partition": list(kronecker.word_to_partition(w))} for w in ws]))
    return OK


def cmd_cycles(args) -> int:
    if args.order < 2:
        raise InputError("--order must be at least 2")
    if args.seed is None:
        system = tetrad.canonical_system(args.order)
    else:
        system = tetrad.random_cycle_system(args.order, args.seed)
    cycles = tetrad.enumerate_cycles(system)
    expected = tetrad.cycle_count_formula(args.order - 1)
    match = len(cycles) == expected
    seed_note = f"seed={args.seed}" if args.seed is not None else "canonical"
    if args.count_only or args.format == "csv":
        sys.stdout.write(f"# {seed_note}\n" + _csv([["order", "count", "formula", "match"],
                                                  [args.order, len(cycles), expected, str(match).lower()]]))
    elif args.format == "ascii":
        print(f"# {seed_note}")
        for k, c in enumerate(cycles, start=1):
            print(f"cycle {k}: " + " ".join(str(v) for v in c.vertices))
            print(tetrad.render_cycle(system, c))
    else:
        print(_dump({"order": args.order, "system": seed_note, "count": len(cycles),
                     "formula": expected, "match": match, "cycles": [c.to_dict() for c in cycles]}))
    return OK if match else MISMATCH


def cmd_fibtriangle(args) -> int:
    if args.rows < 2:
        raise InputError("--rows must be at least 2")
    tri = fibtriangle.build_triangle(args.rows)
    checks = [fibtriangle.fibonacci_partition_check(tri, t) for t in range(args.rows + 1)]
    ok = all(c[2] for c in checks)
    if args.render:
        print(fibtriangle.render_triangle(tri))
    else:
        sys.stdout.write(_csv([["t", "fibonacci", "weighted_sum", "ok"]] + [
            [t, f, s, str(eq).lower()] for t, (f, s, eq) in enumerate(checks)
        ]))
    return OK if ok else MISMATCH


def _parse_range(text: str | None) -> list[int] | None:
    if not text:
        return None
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return list(range(int(lo), int(hi) + 1))
        return [int(x) for x in text.split(",")]
    except ValueError as exc:
        raise InputError(f"bad range {text!r}; use LO:HI or a,b,c") from exc


def cmd_ledger(args) -> int:
    params = _parse_range(args.range)
    if params is None and args.n is not None:
        params = [args.n]
    try:
        report = families.ledger(args.family, params, sequence=args.sequence)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    if args.format == "json":
        print(_dump(report.to_dict()))
    else:
        sys.stdout.write(report.to_csv())
    bad = report.unexpected()
    for row in bad:
        print(f"unexpected verdict: {row.claim} {row.parameter} -> {row.verdict}", file=sys.stderr)
    exempt = sorted({r.claim for r in report.rows if r.expected != "match"})
    if exempt:
        print(f"reported discrepancies (exempt): {', '.join(exempt)}", file=sys.stderr)
    return MISMATCH if bad else OK


def _require_valid(cfg) -> None:
    report = validate(cfg)
    if not report.ok:
        v = report.violations[0]
        raise InputError(f"invalid configuration: {v.axiom}: {v.message}")


# parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="brauercat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("validate", help="check configuration axioms")
    s.add_argument("config")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("quiver", help="build the quiver")
    s.add_argument("config")
    s.add_argument("--format", choices=["json", "dot"], default="json")
    s.add_argument("--loops", choices=["wrap", "no-wrap"], default="wrap")
    s.add_argument("--collapse", action="store_true", help="merge parallel arrows in DOT output")
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("relations", help="list relations of types I, II, III")
    s.add_argument("config")
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("invariants", help="dimension, center, hearts, loops")
    s.add_argument("config")
    s.add_argument("--format", choices=["json"], default="json")
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("reduce", help="remove removable truncated vertices")
    s.add_argument("config")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("family", help="build a configuration family")
    s.add_argument("--family", choices=["kn", "gamman", "ej", "dn"], required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sequence", default="catalan", help="counting function name or file (dn)")
    s.add_argument("--emit", help="write the configuration JSON here")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("helix", help="enumerate helices")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int, help="use a random system with this seed")
    s.add_argument("--fixed-start", type=int)
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--format", choices=["json", "csv", "ascii"], default="json")
    s.set_defaults(func=cmd_helix)

    s = sub.add_parser("words", help="matrix words and their partitions")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_words)

    s = sub.add_parser("cycles", help="enumerate tetrad cycles")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--seed", type=int, help="relabel the canonical system with this seed")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--format", choices=["json", "csv", "ascii"], default="json")
    s.set_defaults(func=cmd_cycles)

    s = sub.add_parser("fibtriangle", help="Fibonacci partition triangle")
    s.add_argument("--rows", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--csv", action="store_true", help="identity checks as CSV (default)")
    g.add_argument("--render", action="store_true", help="print the triangle")
    s.set_defaults(func=cmd_fibtriangle)

    s = sub.add_parser("ledger", help="closed forms against general formulas")
    s.add_argument("--family", choices=["kn", "gamman", "ej", "dn"], required=True)
    s.add_argument("--range", help="LO:HI or comma list")
    s.add_argument("--n", type=int)
    s.add_argument("--sequence", default="catalan")
    s.add_argument("--format", choices=["csv", "json"], default="csv")
    s.set_defaults(func=cmd_ledger)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
