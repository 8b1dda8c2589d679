"""Exact Clifford-algebra models of the compact spin subalgebras of the E series.

The package constructs, entirely over the rationals, the Lie subalgebra
generated inside a positive definite Clifford algebra by the bivector
and trivector spin generators, and machine-checks every finite claim
about it: closure bases, mod-4 binomial dimension counts, the period-8
matrix-algebra tables, defining relations, Killing definiteness, rank
certificates, the top-blade eigenspace split, and positive-root counts.
"""

from .analysis import (
    ClassificationResult,
    SplitResult,
    StructureConstants,
    analyze,
    center_dim,
    classify,
    derived_dim,
    killing_form,
    rank_estimate,
    split_check,
    structure_constants,
)
from .bott import (
    CompactTypeDescriptor,
    MatrixAlgebraDescriptor,
    bott_algebra,
    expected_dim,
    expected_rank,
    max_compact,
)
from .clifford import (
    Blade,
    Multivector,
    blade_product,
    blades_anticommute,
    bracket,
    format_multivector,
    grade_parts,
    mv_product,
    parse_blade,
    parse_multivector,
)
from .closure import (
    ClosureBasis,
    GeneralClosureBasis,
    blade_closure,
    general_closure,
    lemma_containment_check,
    predicted_masks,
)
from .deltas import delta_closed, delta_identities, delta_sum, lower_bound_dim
from .linalg import (
    DEFAULT_PRIMES,
    EchelonBasis,
    RationalMatrix,
    is_negative_definite,
    kernel_dimension,
    kernel_dimension_mod_p,
)
from .report import VerificationReport, algebra_table, run_verification
from .roots import RootSet, positive_roots, theorem_b_check
from .spinrep import (
    EnDiagram,
    SpinGenerators,
    en_adjacency,
    spin_generators,
    verify_relations,
)

__version__ = "0.1.0"

__all__ = [
    "Blade",
    "ClassificationResult",
    "ClosureBasis",
    "CompactTypeDescriptor",
    "DEFAULT_PRIMES",
    "EchelonBasis",
    "EnDiagram",
    "GeneralClosureBasis",
    "MatrixAlgebraDescriptor",
    "Multivector",
    "RationalMatrix",
    "RootSet",
    "SpinGenerators",
    "SplitResult",
    "StructureConstants",
    "VerificationReport",
    "algebra_table",
    "analyze",
    "blade_closure",
    "blade_product",
    "blades_anticommute",
    "bott_algebra",
    "bracket",
    "center_dim",
    "classify",
    "delta_closed",
    "delta_identities",
    "delta_sum",
    "derived_dim",
    "en_adjacency",
    "expected_dim",
    "expected_rank",
    "format_multivector",
    "general_closure",
    "grade_parts",
    "is_negative_definite",
    "kernel_dimension",
    "kernel_dimension_mod_p",
    "killing_form",
    "lemma_containment_check",
    "lower_bound_dim",
    "max_compact",
    "mv_product",
    "parse_blade",
    "parse_multivector",
    "positive_roots",
    "predicted_masks",
    "rank_estimate",
    "run_verification",
    "spin_generators",
    "split_check",
    "structure_constants",
    "theorem_b_check",
    "verify_relations",
]
