"""
Total non-negativity certificates and the variation-decreasing property.
"""
from .models import MinorWitness, SignMode, TnnReport, VariationReport, VariationViolation
from .total_nonnegativity import is_totally_nonnegative, is_totally_positive, iter_minors, minor_count
from .variation import check_variation_decreasing, find_variation_counterexample, weak_variation

__all__ = [
    'MinorWitness', 'SignMode', 'TnnReport', 'VariationReport', 'VariationViolation',
    'is_totally_nonnegative', 'is_totally_positive', 'iter_minors', 'minor_count',
    'check_variation_decreasing', 'find_variation_counterexample', 'weak_variation',
]
