"""
Planar networks, their weight matrices and path enumeration.
"""
from .builders import (
    diagonal_edges,
    grid_id,
    lah_network,
    mutate_diagonal,
    mutate_edge,
    sink_id,
    source_id,
    unit_network,
)
from .export import from_json, to_document, to_dot, to_json, to_text
from .models import CellDifference, Edge, EdgeKind, Network, NetworkDocument, Path, TheoremCheck, Vertex
from .paths import (
    PathShape,
    check_weight_matrix,
    count_paths,
    enumerate_paths,
    iter_paths,
    path_shape,
    path_weight,
    weight_matrix,
    weight_matrix_forward,
)

__all__ = [
    'diagonal_edges', 'grid_id', 'lah_network', 'mutate_diagonal', 'mutate_edge', 'sink_id', 'source_id',
    'unit_network',
    'from_json', 'to_document', 'to_dot', 'to_json', 'to_text',
    'CellDifference', 'Edge', 'EdgeKind', 'Network', 'NetworkDocument', 'Path', 'TheoremCheck', 'Vertex',
    'PathShape', 'check_weight_matrix', 'count_paths', 'enumerate_paths', 'iter_paths', 'path_shape', 'path_weight',
    'weight_matrix', 'weight_matrix_forward',
]
