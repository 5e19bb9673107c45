"""Configuration families built from integer sequences, and the claims ledger.

Families
--------
``kn``      two vertices, polygon t holds x1 (2t+2)! times and x2 t(2t+2)! times
``gamman``  vertices 1..n+1, polygon t holds t t^2 times and t+1 (t+1) times
``ej``      polygons whose hearts count tetrad cycles, i^3 + (i+1)^2
``dn``      nested polygons sized by a strictly increasing counting function

The ledger evaluates each closed-form statement about a family next to the
general formulas (both loop conventions) and, where cheap, an enumeration.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from importlib import resources
from math import comb, factorial
from pathlib import Path
from typing import Callable, Sequence

from .config import BrauerConfiguration, Polygon, VertexDecl, reduce
from .invariants import center_formula, dimension, heart_summands
from .kronecker import canonical_system as helix_system
from .kronecker import enumerate_helices, helix_count
from .tetrad import canonical_system as cycle_system
from .tetrad import cycle_count_formula, enumerate_cycles

__all__ = [
    "CountingFunction",
    "LedgerRow",
    "LedgerReport",
    "triangular",
    "build_Kn",
    "build_Gamman",
    "build_Ej",
    "build_Dn",
    "build_family",
    "sequence_registry",
    "load_counting_function",
    "load_fixtures",
    "ledger",
    "SEQUENCES",
    "DN_MAX_VERTICES",
]


def triangular(h: int) -> int:
    return h * (h + 1) // 2


# builders ------------------------------------------------------------------


def build_Kn(n: int, variant: str = "standard") -> BrauerConfiguration:
    """``variant="4t+1"`` uses (4t+1)! and 2t(4t+1)! occurrences instead."""
    if n < 3:
        raise ValueError("K^n needs n >= 3")
    polys = []
    for t in range(1, n + 1):
        if variant == "standard":
            base = factorial(2 * t + 2)
            occ = (("x1", base), ("x2", t * base))
        elif variant == "4t+1":
            base = factorial(4 * t + 1)
            occ = (("x1", base), ("x2", 2 * t * base))
        else:
            raise ValueError(f"unknown variant {variant!r}")
        polys.append(Polygon(f"V{t}", occ))
    return BrauerConfiguration((VertexDecl("x1"), VertexDecl("x2")), tuple(polys))


def build_Gamman(n: int) -> BrauerConfiguration:
    if n < 2:
        raise ValueError("Gamma_n needs n >= 2")
    verts = tuple(VertexDecl(str(v)) for v in range(1, n + 2))
    polys = tuple(Polygon(f"V{t}", ((str(t), t * t), (str(t + 1), t + 1))) for t in range(1, n + 1))
    return BrauerConfiguration(verts, polys)


def build_Ej(j: int) -> BrauerConfiguration:
    """Polygon T_i holds i^2 vertices shared with T_{i-1}, i^3 - i^2 private
    vertices and (i+1)^2 vertices shared with T_{i+1}.

    Vertex ids: ``L1`` for the single level-1 vertex, ``S{i}.{k}`` for the
    shared stratum of size i^2 (i >= 2), ``P{i}.{k}`` for private ones.
    Private vertices, L1 and the top stratum of T_j have multiplicity 2.
    """
    if j < 2:
        raise ValueError("E^j needs j >= 2")

    def stratum(i: int) -> list[str]:
        return ["L1"] if i == 1 else [f"S{i}.{k}" for k in range(1, i * i + 1)]

    verts: list[VertexDecl] = [VertexDecl("L1", 2)]
    polys = []
    for i in range(1, j + 1):
        private = [f"P{i}.{k}" for k in range(1, i**3 - i * i + 1)]
        upper = stratum(i + 1)
        verts.extend(VertexDecl(v, 2) for v in private)
        verts.extend(VertexDecl(v, 2 if i == j else 1) for v in upper)
        members = stratum(i) + private + upper
        polys.append(Polygon(f"T{i}", tuple((v, 1) for v in members)))
    return BrauerConfiguration(tuple(verts), tuple(polys))


# refuse to materialize D^n instances with more vertices than this
DN_MAX_VERTICES = 1_000_000


@dataclass(frozen=True)
class CountingFunction:
    name: str
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError(f"{self.name}: empty sequence")
        if self.values[0] < 2:
            raise ValueError(f"{self.name}: first term must exceed 1, got {self.values[0]}")
        for a, b in zip(self.values, self.values[1:]):
            if b <= a:
                raise ValueError(f"{self.name}: not strictly increasing at {a}, {b}")

    def __len__(self) -> int:
        return len(self.values)

    def u(self, i: int) -> int:
        """1-based term."""
        return self.values[i - 1]


def build_Dn(u: CountingFunction, n: int, max_vertices: int = DN_MAX_VERTICES) -> BrauerConfiguration:
    """Polygon P_h holds every vertex of level at most h once; level-n
    vertices have multiplicity 2.  There are u_1 level-1 vertices and
    u_s - u_{s-1} of level s."""
    if not 2 <= n <= len(u):
        raise ValueError(f"need 2 <= n <= {len(u)} for sequence {u.name}")
    if u.u(n) > max_vertices:
        raise ValueError(f"D^{n} for {u.name} has {u.u(n)} vertices (limit {max_vertices})")
    levels: list[list[str]] = []
    prev = 0
    for s in range(1, n + 1):
        levels.append([f"L{s}.{k}" for k in range(1, u.u(s) - prev + 1)])
        prev = u.u(s)
    verts = tuple(
        VertexDecl(v, 2 if s == n else 1) for s, level in enumerate(levels, start=1) for v in level
    )
    polys = []
    for h in range(1, n + 1):
        members = [v for level in levels[:h] for v in level]
        polys.append(Polygon(f"P{h}", tuple((v, 1) for v in members)))
    return BrauerConfiguration(verts, tuple(polys))


# counting functions --------------------------------------------------------


def _catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def _partitions(limit: int) -> list[int]:
    """p(0..limit) by the recurrence over parts."""
    p = [1] + [0] * limit
    for part in range(1, limit + 1):
        for m in range(part, limit + 1):
            p[m] += p[m - part]
    return p


def _fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def _dedekind() -> list[int]:
    data = json.loads(resources.files("brauercat.data").joinpath("dedekind.json").read_text())
    return data["values"]


SEQUENCES: dict[str, Callable[[int], list[int]]] = {
    "catalan": lambda N: [_catalan(m + 1) for m in range(1, N + 1)],
    "partitions": lambda N: _partitions(N + 1)[2 : N + 2],
    # compositions of m without parts equal to 1, for m = 4, 5, ...
    "fibonacci-compositions": lambda N: [_fibonacci(m - 1) for m in range(4, N + 4)],
    "dedekind": lambda N: _dedekind()[:N],
}


def load_counting_function(path: str | Path) -> CountingFunction:
    """Read a JSON list, a JSON object with ``values``, or one integer per line."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [int(line) for line in text.split() if line.strip()]
    if isinstance(data, dict):
        data = data["values"]
    return CountingFunction(path.stem, tuple(int(x) for x in data))


def sequence_registry(name: str, N: int) -> CountingFunction:
    if N < 1:
        raise ValueError("N must be positive")
    if name in SEQUENCES:
        values = SEQUENCES[name](N)
        if len(values) < N:
            raise ValueError(f"sequence {name!r} has only {len(values)} known terms")
        return CountingFunction(name, tuple(values))
    path = Path(name)
    if path.exists():
        cf = load_counting_function(path)
        if len(cf) < N:
            raise ValueError(f"{path} has only {len(cf)} terms")
        return CountingFunction(cf.name, cf.values[:N])
    raise KeyError(f"unknown sequence {name!r}; known: {sorted(SEQUENCES)}")


def load_fixtures() -> dict:
    """Reference terms of related OEIS sequences, keyed by A-number."""
    return json.loads(resources.files("brauercat.data").joinpath("oeis_fixtures.json").read_text())


def build_family(family: str, n: int, sequence: str = "catalan") -> BrauerConfiguration:
    if family == "kn":
        return build_Kn(n)
    if family == "gamman":
        return build_Gamman(n)
    if family == "ej":
        return build_Ej(n)
    if family == "dn":
        return build_Dn(sequence_registry(sequence, n), n)
    raise ValueError(f"unknown family {family!r}")


# ledger --------------------------------------------------------------------

MATCH, MISMATCH, CONVENTION = "match", "mismatch", "convention-dependent"


@dataclass(frozen=True)
class LedgerRow:
    claim: str
    statement: str
    parameter: str
    closed_form: int
    general: dict[str, int]
    oracle: int | None
    verdict: str
    expected: str  # "match" or "discrepancy"

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "statement": self.statement,
            "parameter": self.parameter,
            "closedForm": self.closed_form,
            "general": {"wrap": self.general["wrap"], "noWrap": self.general["no-wrap"]},
            "oracle": self.oracle,
            "verdict": self.verdict,
            "expected": self.expected,
        }


@dataclass
class LedgerReport:
    family: str
    parameters: list[int]
    rows: list[LedgerRow] = field(default_factory=list)
    sequence: str | None = None

    def unexpected(self) -> list[LedgerRow]:
        """Rows expected to match that do not."""
        return [r for r in self.rows if r.expected == MATCH and r.verdict != MATCH]

    def rows_for(self, claim: str) -> list[LedgerRow]:
        return [r for r in self.rows if r.claim == claim]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "sequence": self.sequence,
            "parameters": self.parameters,
            "rows": [r.to_dict() for r in self.rows],
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["family", "claim", "parameter", "closed_form", "general_wrap",
                    "general_no_wrap", "oracle", "verdict", "expected"])
        for r in self.rows:
            w.writerow([self.family, r.claim, r.parameter, r.closed_form, r.general["wrap"],
                        r.general["no-wrap"], "" if r.oracle is None else r.oracle,
                        r.verdict, r.expected])
        return buf.getvalue()


def verdict(closed: int, general: dict[str, int], oracle: int | None = None) -> str:
    """Match under the default (wrap) convention, convention-dependent when
    only the no-wrap value agrees, mismatch otherwise or when an enumeration
    disagrees with the general formula."""
    if oracle is not None and oracle != general["wrap"]:
        return MISMATCH
    if closed == general["wrap"]:
        return MATCH
    if closed == general["no-wrap"]:
        return CONVENTION
    return MISMATCH


def _row(claim, statement, parameter, closed, general, expected, oracle=None) -> LedgerRow:
    if isinstance(general, int):
        general = {"wrap": general, "no-wrap": general}
    return LedgerRow(claim, statement, parameter, closed, general, oracle,
                     verdict(closed, general, oracle), expected)


def _centers(cfg: BrauerConfiguration) -> dict[str, int]:
    red = reduce(cfg)
    return {c: center_formula(red, c) for c in ("wrap", "no-wrap")}


HELIX_ORACLE_MAX = 6
CYCLE_ORACLE_MAX = 4


def _kn_rows(n: int) -> list[LedgerRow]:
    cfg = build_Kn(n)
    rows = []
    for t in range(1, n + 1):
        oracle = None
        if 2 * t + 2 <= HELIX_ORACLE_MAX:
            oracle = len(enumerate_helices(helix_system(2 * t + 2)))
        rows.append(_row("kn-heart", "heart(V_t) = (2t+2)! ceil((2t+2)/2)", f"n={n},t={t}",
                         helix_count(2 * t + 2), heart_summands(cfg, f"V{t}"), MATCH, oracle))
    gamma = sum(m * factorial(2 * m + 2) for m in range(1, n + 1))
    delta = sum(factorial(2 * m + 2) for m in range(1, n + 1))
    rows.append(_row("kn-dimension", "dim = 2(n + t_(gamma-1) + t_(delta-1))", f"n={n}",
                     2 * (n + triangular(gamma - 1) + triangular(delta - 1)), dimension(cfg), MATCH))
    hsum = sum(helix_count(2 * t + 2) for t in range(1, n + 1))
    rows.append(_row("kn-center", "dim Z = n - 1 + sum_t h(2t+2)", f"n={n}",
                     n - 1 + hsum, _centers(cfg), "discrepancy"))
    return rows


def _gamman_dim_closed(n: int) -> int:
    return sum((m * (m + 1)) ** 2 for m in range(2, n + 1)) - (n - 3) * (n + 1) * (n + 2) // 3


def _gamman_rows(n: int) -> list[LedgerRow]:
    cfg = build_Gamman(n)
    rows = []
    for i in range(2, n + 1):
        rows.append(_row("gamman-heart", "heart(V_i) = i^2 + i + 1", f"n={n},i={i}",
                         i * i + i + 1, heart_summands(cfg, f"V{i}"), MATCH))
    for t in range(1, n + 1):
        value = sum(int(v) * c for v, c in cfg.polygon(f"V{t}").occurrences)
        rows.append(_row("gamman-polygon-value", "sum of labels in V_t = t^3 + (t+1)^2",
                         f"n={n},t={t}", t**3 + (t + 1) ** 2, value, MATCH))
    rows.append(_row("gamman-dimension", "dim = sum_{m=2..n} (m(m+1))^2 - (n-3)(n+1)(n+2)/3",
                     f"n={n}", _gamman_dim_closed(n), dimension(cfg), MATCH))
    rows.append(_row("gamman-dimension-step", "dim(n+1) - dim(n) = 2(1 - t_n) + ((n+1)(n+2))^2",
                     f"n={n}", 2 * (1 - triangular(n)) + ((n + 1) * (n + 2)) ** 2,
                     dimension(build_Gamman(n + 1)) - dimension(cfg), MATCH))
    z = _centers(cfg)
    rows.append(_row("gamman-center", "dim Z = n(n+1)(n+2)/3 + 1", f"n={n}",
                     n * (n + 1) * (n + 2) // 3 + 1, z, "discrepancy"))
    z_next = _centers(build_Gamman(n + 1))
    rows.append(_row("gamman-center-step", "Z(n+1) - Z(n) = 2 t_(n+1)", f"n={n}",
                     2 * triangular(n + 1), {c: z_next[c] - z[c] for c in z}, MATCH))
    return rows


def _ej_rows(j: int) -> list[LedgerRow]:
    cfg = build_Ej(j)
    rows = []
    for i in range(1, j + 1):
        oracle = None
        if i <= CYCLE_ORACLE_MAX:
            oracle = len(enumerate_cycles(cycle_system(i + 1)))
        rows.append(_row("ej-heart", "heart(T_i) = i^3 + (i+1)^2", f"j={j},i={i}",
                         cycle_count_formula(i), heart_summands(cfg, f"T{i}"), MATCH, oracle))
    closed = (j + 1) * (j + 2) * (2 * j + 3) // 6 + triangular(j) ** 2 + 2 * j - 1
    dim = dimension(cfg)
    rows.append(_row("ej-dimension", "dim = (j+1)(j+2)(2j+3)/6 + (j(j+1)/2)^2 + 2j - 1",
                     f"j={j}", closed, dim, MATCH))
    rows.append(_row("ej-dimension-step", "dim(j+1) - dim(j) = h(j+1) + 2", f"j={j}",
                     cycle_count_formula(j + 1) + 2, dimension(build_Ej(j + 1)) - dim, MATCH))
    z = _centers(cfg)
    rows.append(_row("ej-center", "dim Z = sum_{i<=j} (i^3 - i^2) + j + 2", f"j={j}",
                     sum(i**3 - i * i for i in range(1, j + 1)) + j + 2, z, "discrepancy"))
    if j >= 3:
        z_prev = _centers(build_Ej(j - 1))
        rows.append(_row("ej-center-step", "Z(j) - Z(j-1) = j^3 - j^2 + 1", f"j={j}",
                         j**3 - j * j + 1, {c: z[c] - z_prev[c] for c in z}, "discrepancy"))
    return rows


def _dn_rows(u: CountingFunction, n: int) -> list[LedgerRow]:
    cfg = build_Dn(u, n)
    tag = f"{u.name},n={n}"
    rows = []
    for i in range(1, n + 1):
        rows.append(_row("dn-heart", "heart(P_i) = u_i", f"{tag},i={i}",
                         u.u(i), heart_summands(cfg, f"P{i}"), MATCH))
    closed = 2 * n + n * (n - 1) * u.u(1) + 2 * sum(
        triangular(n - i) * (u.u(i) - u.u(i - 1)) for i in range(2, n + 1)
    )
    rows.append(_row("dn-dimension", "dim = 2n + n(n-1)u_1 + 2 sum_{i=2..n} t_(n-i)(u_i - u_(i-1))",
                     tag, closed, dimension(cfg), "discrepancy"))
    rows.append(_row("dn-center", "dim Z = (u_n - u_(n-1)) + n + 1", tag,
                     u.u(n) - u.u(n - 1) + n + 1, _centers(cfg), MATCH))
    return rows


DEFAULT_RANGES = {"kn": (3, 5), "gamman": (2, 8), "ej": (2, 6), "dn": (2, 8)}


def ledger(
    family: str,
    parameters: Sequence[int] | None = None,
    sequence: str = "catalan",
) -> LedgerReport:
    if family not in DEFAULT_RANGES:
        raise ValueError(f"unknown family {family!r}")
    if parameters is None:
        lo, hi = DEFAULT_RANGES[family]
        parameters = range(lo, hi + 1)
    params = list(parameters)
    report = LedgerReport(family, params, sequence=sequence if family == "dn" else None)
    if family == "dn":
        u = sequence_registry(sequence, max(params))
    for p in params:
        if family == "kn":
            report.rows.extend(_kn_rows(p))
        elif family == "gamman":
            report.rows.extend(_gamman_rows(p))
        elif family == "ej":
            report.rows.extend(_ej_rows(p))
        else:
            report.rows.extend(_dn_rows(u, p))
    return report
