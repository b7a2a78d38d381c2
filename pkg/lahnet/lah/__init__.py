"""
Lah numbers, the Lah matrix and the rising/falling factorial identity.
"""
from .matrix import LahMatrix, check_triple_agreement, format_triangle, lah_matrix, pascal_matrix
from .models import EnumerationReport, IdentityReport
from .numbers import (
    lah_closed_form,
    lah_enumerate,
    lah_recurrence_table,
    lah_row_sums,
    ordered_set_partitions,
)
from .polynomial import (
    IntPolynomial,
    falling_factorial,
    lah_expansion,
    rising_factorial,
    verify_polynomial_identity,
)

__all__ = [
    'LahMatrix', 'check_triple_agreement', 'format_triangle', 'lah_matrix', 'pascal_matrix',
    'EnumerationReport', 'IdentityReport',
    'lah_closed_form', 'lah_enumerate', 'lah_recurrence_table', 'lah_row_sums',
    'ordered_set_partitions',
    'IntPolynomial', 'falling_factorial', 'lah_expansion', 'rising_factorial',
    'verify_polynomial_identity',
]
