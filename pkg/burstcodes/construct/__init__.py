"""
Generator-matrix constructions for optimal burst-erasure codes.
"""

from .data_classes import Code
from .recursive import p_matrix, generator_recursive
from .extenders import (
    extend_fixed_dimension,
    extend_fixed_redundancy,
    dual_generator,
    redundancy_parity_check,
)
from .extension import (
    extension_basis,
    extension_column,
    extension_columns,
    unique_binary_extension,
    generator_column_extended,
)
from .explicit import q_exponent, q_matrix, m_matrix, generator_explicit
from .lemmas import (
    lemma_v_matrix,
    lemma_w_matrix,
    lemma_w_integer_matrix,
    lemma_s_matrix,
    lemma_t_matrix,
)
