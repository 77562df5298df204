"""Exact classical periods of Laurent-polynomial Landau-Ginzburg potentials.

Sparse Laurent polynomial arithmetic over exact rationals or a graded
curve-class monoid algebra; constant terms of powers with Newton-polytope
pruning; composition/multinomial bookkeeping for naive curve counts;
mutations; reference mirrors; an expression parser, CLI and record database.
"""

from . import backends
from .errors import (
    ConventionViolation,
    CorruptRecord,
    DimensionMismatch,
    EmptySupport,
    KernelCapacityError,
    LgPeriodError,
    MissingClassTag,
    MonoidMismatch,
    NotUnimodular,
    ParseError,
    PartitionMismatch,
    ProfileDegreeMismatch,
    TruncationExceeded,
    UnknownSpace,
)
from .expressions import (
    infer_rank,
    parse_expression,
    parse_polynomial,
    poly_to_text,
    split_top_level_summands,
    to_poly,
)
from .laurent import LaurentPoly, integer_determinant, poly_string, variable_names
from .mori import CurveClass, CurveClassMonoid, MoriAlgebra, MoriElement
from .mutation import (
    MutationData,
    NotMutable,
    PeriodComparison,
    check_period_invariance,
    divide_exact,
    mutate,
    w_decompose,
)
from .partitions import (
    PartitionCountTable,
    SPartition,
    assemble_period_coefficient,
    enumerate_s_partitions,
    group_classes_by_partition,
    multinomial,
    p_from_naive,
    table_from_groups,
)
from .period import (
    GradingReport,
    GradingViolation,
    PeriodSequence,
    PotentialComponent,
    PotentialSpec,
    check_grading,
    classical_period,
    classical_period_bruteforce,
    period_match,
    quantum_period_series,
)
from .polytope import NewtonPolytope, newton_polytope
from .references import (
    ReferenceSpace,
    naive_count_p1,
    reference_potential,
    reference_quantum_period,
)
from .rings import QQ

__version__ = "0.1.0"

__all__ = [
    "backends",
    "QQ",
    "LaurentPoly",
    "poly_string",
    "variable_names",
    "integer_determinant",
    "NewtonPolytope",
    "newton_polytope",
    "CurveClass",
    "CurveClassMonoid",
    "MoriAlgebra",
    "MoriElement",
    "PeriodSequence",
    "classical_period",
    "classical_period_bruteforce",
    "period_match",
    "quantum_period_series",
    "PotentialComponent",
    "PotentialSpec",
    "check_grading",
    "GradingReport",
    "GradingViolation",
    "SPartition",
    "PartitionCountTable",
    "enumerate_s_partitions",
    "multinomial",
    "p_from_naive",
    "assemble_period_coefficient",
    "group_classes_by_partition",
    "table_from_groups",
    "ReferenceSpace",
    "reference_potential",
    "naive_count_p1",
    "reference_quantum_period",
    "MutationData",
    "NotMutable",
    "PeriodComparison",
    "w_decompose",
    "mutate",
    "divide_exact",
    "check_period_invariance",
    "parse_expression",
    "parse_polynomial",
    "to_poly",
    "infer_rank",
    "poly_to_text",
    "split_top_level_summands",
    "LgPeriodError",
    "DimensionMismatch",
    "NotUnimodular",
    "EmptySupport",
    "MonoidMismatch",
    "ConventionViolation",
    "PartitionMismatch",
    "ProfileDegreeMismatch",
    "MissingClassTag",
    "TruncationExceeded",
    "UnknownSpace",
    "ParseError",
    "CorruptRecord",
    "KernelCapacityError",
]
