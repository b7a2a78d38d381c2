"""
Layered planar networks whose weight matrices are the Lah and Pascal triangles.

Row r (1 <= r <= n) holds the source a_r and grid vertices u_{r,1}..u_{r,r},
where u_{r,r} is the sink b_r. Edges:

- stub       a_r -> u_{r,1}, weight 1
- horizontal u_{r,c} -> u_{r,c+1}, weight 1, for 1 <= c < r
- diagonal   u_{r,c} -> u_{r-1,c}, weight r, for 1 <= c <= r-1

A path a_m -> b_k therefore takes m-k diagonals of weights m, m-1, ..., k+1
and k-1 horizontals inside the grid, so its weight is m!/k!.
"""
import logging
from typing import List

from lahnet.network.models import Edge, EdgeKind, Network, Vertex
from lahnet.utils.constants import GRID_ID, GRID_LABEL, SINK_ID, SINK_LABEL, SOURCE_ID, SOURCE_LABEL
from lahnet.utils.errors import NetworkError, ParameterError

logger = logging.getLogger(__name__)


def source_id(row: int) -> str:
    return SOURCE_ID.format(row=row)


def sink_id(row: int) -> str:
    return SINK_ID.format(row=row)


def grid_id(row: int, col: int) -> str:
    """u_{row,col}; the last vertex of a row is that row's sink."""
    if col == row:
        return sink_id(row)
    return GRID_ID.format(row=row, col=col)


def _layered_network(n: int, unit: bool) -> Network:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ParameterError(f"network size must be a positive integer, got {n!r}")

    vertices: List[Vertex] = []
    edges: List[Edge] = []
    for r in range(1, n + 1):
        vertices.append(Vertex(source_id(r), SOURCE_LABEL.format(row=r)))
        for c in range(1, r):
            vertices.append(Vertex(grid_id(r, c), GRID_LABEL.format(row=r, col=c)))
        vertices.append(Vertex(sink_id(r), SINK_LABEL.format(row=r)))

        edges.append(Edge(source_id(r), grid_id(r, 1), 1, EdgeKind.STUB))
        for c in range(1, r):
            edges.append(Edge(grid_id(r, c), grid_id(r, c + 1), 1, EdgeKind.HORIZONTAL))
        for c in range(1, r):
            edges.append(Edge(grid_id(r, c), grid_id(r - 1, c), 1 if unit else r, EdgeKind.DIAGONAL))

    network = Network(
        tuple(vertices),
        tuple(edges),
        tuple(source_id(r) for r in range(1, n + 1)),
        tuple(sink_id(r) for r in range(1, n + 1)),
    )
    logger.debug(
        f"built {'unit' if unit else 'lah'} network",
        extra={"n": n, "vertices": len(vertices), "edges": len(edges)},
    )
    return network


def lah_network(n: int) -> Network:
    """N_n: diagonals leaving row r weigh r."""
    return _layered_network(n, unit=False)


def unit_network(n: int) -> Network:
    """Same topology as lah_network(n) with every weight 1."""
    return _layered_network(n, unit=True)


def diagonal_edges(network: Network) -> List[Edge]:
    return network.edges_of_kind(EdgeKind.DIAGONAL)


def mutate_edge(network: Network, tail: str, head: str, weight: int) -> Network:
    """Copy of the network with edge tail -> head reweighted."""
    old = network.edge_weight(tail, head)
    logger.info(f"mutating {tail}->{head}: {old} -> {weight}")
    return network.with_weight(tail, head, weight)


def mutate_diagonal(network: Network, row: int, col: int, weight: int) -> Network:
    """Reweight the diagonal u_{row,col} -> u_{row-1,col}."""
    tail, head = grid_id(row, col), grid_id(row - 1, col)
    edge = network.edge(tail, head)
    if edge is None or edge.kind != EdgeKind.DIAGONAL:
        raise NetworkError(f"no diagonal edge leaves u[{row},{col}]", row=row, col=col)
    return mutate_edge(network, tail, head, weight)
