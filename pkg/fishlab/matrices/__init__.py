"""Fishburn matrices and the interval orders they encode."""

from fishlab.matrices.cells import (
    CellBelowDiagonal,
    cell_position,
    comparable,
    weakly_ne,
    weakly_nw,
    weakly_se,
    weakly_sw,
)
from fishlab.matrices.enumerate import (
    count_matrices,
    enumerate_matrices,
    enumerate_primitive,
    has_pair,
)
from fishlab.matrices.extension import (
    CodeLengthMismatch,
    ExtensionCode,
    InflationMismatch,
    InvalidCode,
    NoParent,
    NotPrimitive,
    code_sequence,
    decompose,
    deflate,
    extend,
    inflate,
)
from fishlab.matrices.extreme import (
    MatrixStats,
    extreme_cells,
    longest_chain,
    matrix_stats,
    ne,
    stat_names,
    stat_value,
)
from fishlab.matrices.model import (
    FishburnMatrix,
    NotUpperTriangular,
    ZeroColumn,
    ZeroRow,
    validate,
)
from fishlab.matrices.orders import (
    CellOrder,
    NotIntervalOrder,
    matrix_to_order,
    order_to_matrix,
)
from fishlab.matrices.transpose import antidiagonal_transpose

__all__ = [
    "CellBelowDiagonal",
    "CellOrder",
    "CodeLengthMismatch",
    "ExtensionCode",
    "FishburnMatrix",
    "InflationMismatch",
    "InvalidCode",
    "MatrixStats",
    "NoParent",
    "NotIntervalOrder",
    "NotPrimitive",
    "NotUpperTriangular",
    "ZeroColumn",
    "ZeroRow",
    "antidiagonal_transpose",
    "cell_position",
    "code_sequence",
    "comparable",
    "count_matrices",
    "decompose",
    "deflate",
    "enumerate_matrices",
    "enumerate_primitive",
    "extend",
    "extreme_cells",
    "has_pair",
    "inflate",
    "longest_chain",
    "stat_names",
    "stat_value",
    "matrix_stats",
    "matrix_to_order",
    "ne",
    "order_to_matrix",
    "validate",
    "weakly_ne",
    "weakly_nw",
    "weakly_se",
    "weakly_sw",
]
