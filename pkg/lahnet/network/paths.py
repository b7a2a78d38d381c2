import logging
import math
from dataclasses import dataclass
from typing import AbstractSet, Dict, Iterator, List, Optional, Tuple

from lahnet.config import guard_lifted, settings
from lahnet.linalg.matrix import ExactMatrix, first_difference
from lahnet.network.models import CellDifference, EdgeKind, Network, Path, TheoremCheck
from lahnet.utils.errors import GuardError, NetworkError

logger = logging.getLogger(__name__)


# ===== WEIGHT MATRIX =====
def _weights_into(network: Network, sink: str, unit: bool = False) -> Dict[str, int]:
    """Total path weight from every vertex to `sink`, one reverse-topological pass."""
    acc: Dict[str, int] = {sink: 1}
    for v in reversed(network.topological_order):
        if v == sink:
            continue
        acc[v] = sum((1 if unit else w) * acc[head] for head, w in network.successors(v))
    return acc


def _weights_from(network: Network, source: str) -> Dict[str, int]:
    acc: Dict[str, int] = {v: 0 for v in network.topological_order}
    acc[source] = 1
    for v in network.topological_order:
        if acc[v]:
            for head, w in network.successors(v):
                acc[head] += acc[v] * w
    return acc


def weight_matrix(network: Network) -> ExactMatrix:
    """W with w_{i,j} the sum over paths a_i -> b_j of the product of edge weights.

    One backward pass per sink; paths are never enumerated.
    """
    n = network.n
    columns = [_weights_into(network, network.sink(j)) for j in range(1, n + 1)]
    return ExactMatrix.from_rows(
        [[columns[j][network.source(i)] for j in range(n)] for i in range(1, n + 1)]
    )


def weight_matrix_forward(network: Network) -> ExactMatrix:
    """Same matrix as `weight_matrix`, by one forward pass per source."""
    rows = []
    for i in range(1, network.n + 1):
        acc = _weights_from(network, network.source(i))
        rows.append([acc[network.sink(j)] for j in range(1, network.n + 1)])
    return ExactMatrix.from_rows(rows)


def check_weight_matrix(network: Network, expected: ExactMatrix, name: str = "expected") -> TheoremCheck:
    """Compare weight_matrix(network) with `expected`, reporting the first differing cell."""
    difference = first_difference(expected, weight_matrix(network))
    cell = None
    if difference is not None:
        i, j, want, got = difference
        cell = CellDifference(row=i, col=j, expected=want, actual=got)
        logger.warning(
            f"weight matrix of N{network.n} differs from {name} at ({i},{j})",
            extra={"expected": str(want), "actual": str(got)},
        )
    return TheoremCheck(n=network.n, expected=name, equal=cell is None, first_difference=cell)


def count_paths(network: Network, i: int, j: int) -> int:
    """Number of paths a_i -> b_j, ignoring weights."""
    return _weights_into(network, network.sink(j), unit=True)[network.source(i)]


# ===== PATH ENUMERATION =====
def iter_paths(
    network: Network, i: int, j: int, avoid: AbstractSet[str] = frozenset()
) -> Iterator[Path]:
    """Paths a_i -> b_j that touch no vertex of `avoid`, depth-first in edge order."""
    source, sink = network.source(i), network.sink(j)
    if source in avoid or sink in avoid:
        return
    stack: List[str] = [source]

    def walk(v: str) -> Iterator[Path]:
        if v == sink:
            yield Path(tuple(stack))
            return
        for head, _ in network.successors(v):
            if head in avoid:
                continue
            stack.append(head)
            yield from walk(head)
            stack.pop()

    yield from walk(source)


def enumerate_paths(
    network: Network, i: int, j: int, force: bool = False, guard: Optional[int] = None
) -> List[Path]:
    """All paths a_i -> b_j; refused when their count exceeds PATH_GUARD."""
    limit = guard or settings.PATH_GUARD
    total = count_paths(network, i, j)
    if total > limit and not guard_lifted(force):
        logger.warning(f"path enumeration a{i}->b{j} refused", extra={"paths": total, "limit": limit})
        raise GuardError(
            f"{total} paths from a_{i} to b_{j} exceed the guard of {limit}; use weight_matrix instead",
            guard="PATH_GUARD",
            limit=limit,
            estimate=total,
        )
    return list(iter_paths(network, i, j))


def _check_path(network: Network, path: Path) -> None:
    if len(path) < 2:
        raise NetworkError(f"path {path} has fewer than two vertices")
    if path.vertices[0] not in network.sources:
        raise NetworkError(f"path starts at {path.vertices[0]}, which is not a source")
    if path.vertices[-1] not in network.sinks:
        raise NetworkError(f"path ends at {path.vertices[-1]}, which is not a sink")
    if len(set(path.vertices)) != len(path):
        raise NetworkError(f"path {path} repeats a vertex")


def path_weight(network: Network, path: Path) -> int:
    """Product of the edge weights along the path."""
    _check_path(network, path)
    return math.prod(network.edge_weight(tail, head) for tail, head in path.edges)


@dataclass(frozen=True)
class PathShape:
    horizontal: int
    diagonal: int
    stub: int
    diagonal_weights: Tuple[int, ...]


def path_shape(network: Network, path: Path) -> PathShape:
    """Edge counts by kind and the diagonal weights in travel order."""
    _check_path(network, path)
    counts = {kind: 0 for kind in EdgeKind}
    diagonal_weights = []
    for tail, head in path.edges:
        edge = network.edge(tail, head)
        if edge is None:
            raise NetworkError(f"no edge {tail}->{head}", tail=tail, head=head)
        counts[edge.kind] += 1
        if edge.kind == EdgeKind.DIAGONAL:
            diagonal_weights.append(edge.weight)
    return PathShape(
        horizontal=counts[EdgeKind.HORIZONTAL],
        diagonal=counts[EdgeKind.DIAGONAL],
        stub=counts[EdgeKind.STUB],
        diagonal_weights=tuple(diagonal_weights),
    )
