"""
Exact linear algebra substrate.
"""
from .determinant import determinant, determinant_laplace, minor_value
from .integers import binomial, factorial, rising_product
from .matrix import ExactMatrix, IndexSet, all_index_sets, as_index_set, first_difference, submatrix
from .serialization import (
    format_matrix_text,
    matrix_from_csv,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    parse_matrix,
)

__all__ = [
    'ExactMatrix', 'IndexSet', 'all_index_sets', 'as_index_set', 'first_difference', 'submatrix',
    'determinant', 'determinant_laplace', 'minor_value',
    'binomial', 'factorial', 'rising_product',
    'format_matrix_text', 'matrix_from_csv', 'matrix_from_json',
    'matrix_to_csv', 'matrix_to_json', 'parse_matrix',
]
