"""
Vertex-disjoint path families and Lindstrom's lemma.
"""
from .families import (
    PathFamily,
    enumerate_disjoint_families,
    estimate_search_space,
    family_weight_sum,
    iter_disjoint_families,
    verify_lindstrom,
    verify_lindstrom_exhaustive,
)
from .models import LindstromReport, LindstromSummary

__all__ = [
    'PathFamily', 'enumerate_disjoint_families', 'estimate_search_space', 'family_weight_sum',
    'iter_disjoint_families', 'verify_lindstrom', 'verify_lindstrom_exhaustive',
    'LindstromReport', 'LindstromSummary',
]
