"""Partitions, two-line matrices, hook weights and the systems behind them."""

from partition_lab.partitions import Partition, count_partitions_oracle, enumerate_partitions
from partition_lab.matrix import (
    InvalidMatrixError,
    TwoLineMatrix,
    Violation,
    ell,
    lift_from_M0,
    matrix_to_partition,
    partition_to_matrix,
    project_to_M0,
    validate,
)
from partition_lab.path import LatticePath, OddPartition, hooks, matrix_to_path, weight_P
from partition_lab.squared import (
    SquaredPartition,
    SystemSolutionSet,
    B_solutions,
    admits_tsquared,
    decompositions,
    frequency,
    matrix_from_tsquared,
    solve_system,
    tsquared_from_matrix,
)
from partition_lab.identity import (
    VerificationReport,
    image_gaps,
    p_via_main_theorem,
    structural_check,
    verify_range,
)

__all__ = [
    "Partition", "count_partitions_oracle", "enumerate_partitions",
    "InvalidMatrixError", "TwoLineMatrix", "Violation", "ell", "lift_from_M0",
    "matrix_to_partition", "partition_to_matrix", "project_to_M0", "validate",
    "LatticePath", "OddPartition", "hooks", "matrix_to_path", "weight_P",
    "SquaredPartition", "SystemSolutionSet", "B_solutions", "admits_tsquared",
    "decompositions", "frequency", "matrix_from_tsquared", "solve_system",
    "tsquared_from_matrix",
    "VerificationReport", "image_gaps", "p_via_main_theorem", "structural_check",
    "verify_range",
]
