"""
Dense linear algebra over Z_p.
"""

from .matrix import Matrix
from .integer_matrix import IntegerMatrix
from .elimination import (
    row_reduce,
    rank,
    inverse,
    solve,
    nullspace_vector,
    nullspace_basis,
)
from .operations import (
    identity,
    zeros,
    ones,
    transpose,
    matmul,
    hconcat,
    vconcat,
    block,
    cyclic_shift_columns,
    scale_columns,
    submatrix,
    lower_left,
    select_columns,
    is_systematic,
)
