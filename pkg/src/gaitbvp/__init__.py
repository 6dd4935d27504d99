"""Finite-difference solver for singularly perturbed boundary-value problems.

The physical model is a second-order two-point boundary-value problem

    z'' + eps * mu(t) * z' + v(t) * z = f(t),   z(0) = f1,  z(t_f) = f2,

whose solution develops a boundary layer near t = 0 as the perturbation
parameter eps shrinks.  The method splits the domain at a point t_p: the
layer is resolved on a stretched coordinate T = eps * t, the smooth
remainder on the original coordinate, and the two tridiagonal systems
are tied together through the reduced (eps -> 0) solution at t_p.
"""

from .assembly import (
    AssembledRegion,
    StabilityReport,
    assemble_inner,
    assemble_outer,
    stability_check,
)
from .manufactured import FAMILIES, ManufacturedCase, family
from .mesh import (
    DEFAULT_N_INNER,
    DEFAULT_N_OUTER,
    DecompositionPlan,
    InvalidGrid,
    InvalidSplit,
    UniformGrid,
    build_decomposition,
    default_decomposition,
    default_split_point,
    stretch,
    unstretch,
)
from .model import (
    GaitProblem,
    PresetId,
    Variant,
    ZeroStiffness,
    constant,
    manufacture,
    preset,
    reduced_solution,
)
from .reference_tables import CANONICAL_EPSILONS, REFERENCE_ROWS, rows_for
from .solver import (
    ConvergenceReport,
    ConvergenceRow,
    SolutionProfile,
    TableComparison,
    convergence_study,
    max_error,
    solve,
    solve_monolithic,
    table_compare,
)
from .tridiag import (
    OpCounter,
    PivotBreakdown,
    Singular,
    TridiagonalSystem,
    dense_solve_oracle,
    dominance_report,
    residual,
    thomas_solve,
)

__version__ = "0.1.0"

__all__ = [
    "AssembledRegion",
    "CANONICAL_EPSILONS",
    "ConvergenceReport",
    "ConvergenceRow",
    "DEFAULT_N_INNER",
    "DEFAULT_N_OUTER",
    "DecompositionPlan",
    "FAMILIES",
    "GaitProblem",
    "InvalidGrid",
    "InvalidSplit",
    "ManufacturedCase",
    "OpCounter",
    "PivotBreakdown",
    "PresetId",
    "REFERENCE_ROWS",
    "Singular",
    "SolutionProfile",
    "StabilityReport",
    "TableComparison",
    "TridiagonalSystem",
    "UniformGrid",
    "Variant",
    "ZeroStiffness",
    "assemble_inner",
    "assemble_outer",
    "build_decomposition",
    "constant",
    "convergence_study",
    "default_decomposition",
    "default_split_point",
    "dense_solve_oracle",
    "dominance_report",
    "family",
    "manufacture",
    "max_error",
    "preset",
    "reduced_solution",
    "residual",
    "rows_for",
    "solve",
    "solve_monolithic",
    "stability_check",
    "stretch",
    "table_compare",
    "thomas_solve",
]
