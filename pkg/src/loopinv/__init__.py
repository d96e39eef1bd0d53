"""Exact involution eigenspaces of circle-equivariant free loop space
cohomology, with stable pseudoisotopy and A-theory dimension tables."""

__version__ = "0.1.0"

from .algebra import (
    AlgebraMap,
    Derivation,
    Generator,
    GradedAlgebra,
    Polynomial,
    check_differential,
)
from .cohomology import (
    DegreeSlice,
    EigenTable,
    betti,
    cochain_matrix,
    eigen_table,
    induced_involution,
)
from .curvature import (
    CurvaturePair,
    KernelBoundInputs,
    KernelBoundResult,
    eigen_condition_from_model,
    enumerate_pairs,
    kernel_lower_bound,
)
from .linalg import (
    QMatrix,
    column_span_contains,
    involution_eigen_dims,
    kernel_basis,
    rank,
)
from .models import (
    DgaModel,
    MinimalModel,
    base_dga,
    borel_model,
    loop_model,
    parse_model,
    point_borel_model,
)
from .pseudoisotopy import (
    PseudoisotopyRow,
    PseudoisotopyTable,
    k_theory_correction,
    pseudoisotopy_table,
    total_P_dimension,
)
from .series import (
    RationalExpr,
    TruncatedSeries,
    algebra_generating_function,
    equals_expr,
    expand,
    parse_expr,
)

__all__ = [
    "AlgebraMap",
    "CurvaturePair",
    "Derivation",
    "DegreeSlice",
    "DgaModel",
    "EigenTable",
    "Generator",
    "GradedAlgebra",
    "KernelBoundInputs",
    "KernelBoundResult",
    "MinimalModel",
    "Polynomial",
    "PseudoisotopyRow",
    "PseudoisotopyTable",
    "QMatrix",
    "RationalExpr",
    "TruncatedSeries",
    "algebra_generating_function",
    "base_dga",
    "betti",
    "borel_model",
    "check_differential",
    "cochain_matrix",
    "column_span_contains",
    "eigen_condition_from_model",
    "eigen_table",
    "enumerate_pairs",
    "equals_expr",
    "expand",
    "induced_involution",
    "involution_eigen_dims",
    "k_theory_correction",
    "kernel_basis",
    "kernel_lower_bound",
    "loop_model",
    "parse_expr",
    "parse_model",
    "point_borel_model",
    "pseudoisotopy_table",
    "rank",
    "total_P_dimension",
]
