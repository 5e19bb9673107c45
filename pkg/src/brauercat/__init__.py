"""Combinatorial invariants of Brauer configuration algebras.

Configuration families built from integer sequences tie these invariants
to counts of helices on Kronecker matrices and cycles on tetrad matrices.
"""

from .config import (
    BrauerConfiguration,
    ConfigurationError,
    Polygon,
    SuccessorSequence,
    ValidationReport,
    VertexDecl,
    is_connected,
    is_truncated,
    load_configuration,
    random_configuration,
    reduce,
    validate,
    valency,
)
from .families import (
    CountingFunction,
    LedgerReport,
    build_Dn,
    build_Ej,
    build_Gamman,
    build_Kn,
    ledger,
    sequence_registry,
    triangular,
)
from .fibtriangle import (
    build_triangle,
    fibonacci_partition_check,
    hook_rule_check,
    weight,
)
from .invariants import (
    PreconditionError,
    basis_size_check,
    center_dimension,
    compute_invariants,
    dimension,
    heart_summands,
)
from .kronecker import (
    a_of_n,
    canonical_system,
    enumerate_helices,
    helix_count,
    partition_count,
    random_system,
    word_to_partition,
    words,
)
from .quiver import build_quiver, export_dot, relations, special_cycles
from .tetrad import (
    canonical_rep,
    choice_tree,
    cycle_count_formula,
    defect,
    enumerate_cycles,
)

__version__ = "0.1.0"

__all__ = [
    "BrauerConfiguration",
    "ConfigurationError",
    "CountingFunction",
    "LedgerReport",
    "Polygon",
    "PreconditionError",
    "SuccessorSequence",
    "ValidationReport",
    "VertexDecl",
    "a_of_n",
    "basis_size_check",
    "build_Dn",
    "build_Ej",
    "build_Gamman",
    "build_Kn",
    "build_quiver",
    "build_triangle",
    "canonical_rep",
    "canonical_system",
    "center_dimension",
    "choice_tree",
    "compute_invariants",
    "cycle_count_formula",
    "defect",
    "dimension",
    "enumerate_cycles",
    "enumerate_helices",
    "export_dot",
    "fibonacci_partition_check",
    "heart_summands",
    "helix_count",
    "hook_rule_check",
    "is_connected",
    "is_truncated",
    "ledger",
    "load_configuration",
    "partition_count",
    "random_configuration",
    "random_system",
    "reduce",
    "relations",
    "sequence_registry",
    "special_cycles",
    "triangular",
    "validate",
    "valency",
    "weight",
    "word_to_partition",
    "words",
]
