"""Exact q-series and the extended Franklin involution on distinct-part partitions.

The package expands the product of (1 - q^k) over k > m three independent
ways (explicit product, closed forms, signed partition counting), builds
the sign-reversing involution on partitions with distinct parts > m whose
fixed points explain the surviving coefficients, and cross-checks all of
it, including Sylvester's Durfee-square identity in (z, q).
"""

from .involution import (
    AuditReport,
    InvolutionCase,
    InvolutionResult,
    PreconditionViolated,
    SizeStats,
    cancellation_stats,
    combine_audit_reports,
    enumerate_fixed_points,
    involute,
    is_fixed_criterion,
    orbit_audit,
    sigma,
    tau,
)
from .partitions import (
    BoxPartition,
    DistinctPartition,
    DurfeeCategory,
    DurfeeInfo,
    NotInStaircaseForm,
    SignedMonomial,
    base_partition,
    count_distinct_signed,
    durfee,
    enumerate_distinct,
    format_partition,
    mu_decompose,
    parse_partition,
    weight,
)
from .qseries import (
    NonUnitConstantTerm,
    QSeries,
    TruncationMismatch,
    ZQSeries,
    euler_product,
    fixed_point_polynomial,
    format_series,
    gauss_binomial,
    max_distinct_parts,
    pochhammer_neg_zq,
    pochhammer_q,
    pochhammer_zq,
    rhs_fixed_points,
    rhs_general,
    sylvester_sides,
)
from .staircase import (
    Cell,
    CellClass,
    EmptyPartition,
    PartTooSmall,
    Staircase,
    classify_cells,
    render_ferrers,
    staircase,
    top_overlap,
)
from .verify import (
    VerificationReport,
    check_durfee_decomposition,
    check_fixed_point_formula,
    check_general_formula,
    check_sylvester,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BoxPartition",
    "Cell",
    "CellClass",
    "DistinctPartition",
    "DurfeeCategory",
    "DurfeeInfo",
    "EmptyPartition",
    "InvolutionCase",
    "InvolutionResult",
    "NonUnitConstantTerm",
    "NotInStaircaseForm",
    "PartTooSmall",
    "PreconditionViolated",
    "QSeries",
    "SignedMonomial",
    "SizeStats",
    "Staircase",
    "TruncationMismatch",
    "VerificationReport",
    "ZQSeries",
    "base_partition",
    "cancellation_stats",
    "check_durfee_decomposition",
    "check_fixed_point_formula",
    "check_general_formula",
    "check_sylvester",
    "classify_cells",
    "combine_audit_reports",
    "count_distinct_signed",
    "durfee",
    "enumerate_distinct",
    "enumerate_fixed_points",
    "euler_product",
    "fixed_point_polynomial",
    "format_partition",
    "format_series",
    "gauss_binomial",
    "involute",
    "is_fixed_criterion",
    "max_distinct_parts",
    "mu_decompose",
    "orbit_audit",
    "parse_partition",
    "pochhammer_neg_zq",
    "pochhammer_q",
    "pochhammer_zq",
    "render_ferrers",
    "rhs_fixed_points",
    "rhs_general",
    "sigma",
    "staircase",
    "sylvester_sides",
    "tau",
    "top_overlap",
    "weight",
]
