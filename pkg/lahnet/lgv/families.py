"""
Brute-force check of Lindstrom's lemma: a minor of the weight matrix of a
planar network equals the total weight of the families of pairwise
vertex-disjoint paths joining sources I to sinks J.

Path t of a family runs a_{I[t]} -> b_{J[t]} (identity pairing). A family
weighs the product of its path weights.
"""
import logging
import math
from dataclasses import dataclass
from typing import Iterator, List, Optional, Set, Tuple

from lahnet.config import guard_lifted, settings
from lahnet.lgv.models import LindstromReport, LindstromSummary
from lahnet.linalg.determinant import minor_value
from lahnet.linalg.matrix import ExactMatrix, IndexLike, IndexSet, all_index_sets, as_index_set
from lahnet.network.models import Network, Path
from lahnet.network.paths import count_paths, iter_paths, path_weight, weight_matrix
from lahnet.utils.errors import DimensionError, GuardError, InvariantViolation, ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PathFamily:
    """Pairwise vertex-disjoint paths, the t-th from a_{I[t]} to b_{J[t]}."""

    paths: Tuple[Path, ...]

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))
        seen: Set[str] = set()
        for path in self.paths:
            shared = seen.intersection(path.vertices)
            if shared:
                raise InvariantViolation(f"paths share vertices {sorted(shared)}", shared=sorted(shared))
            seen.update(path.vertices)

    def __len__(self) -> int:
        return len(self.paths)

    @property
    def vertex_count(self) -> int:
        return sum(len(p) for p in self.paths)

    def weight(self, network: Network) -> int:
        return math.prod(path_weight(network, p) for p in self.paths)


def _check_pairs(network: Network, I: IndexLike, J: IndexLike) -> Tuple[IndexSet, IndexSet]:
    I, J = as_index_set(I), as_index_set(J)
    if len(I) != len(J) or not len(I):
        raise DimensionError(
            f"source set {I} and sink set {J} must be nonempty and of equal size",
            rows=list(I),
            cols=list(J),
        )
    for role, indices in (("source", I), ("sink", J)):
        if indices.last > network.n:
            raise DimensionError(
                f"{role} index {indices.last} exceeds n={network.n}", index=indices.last, bound=network.n
            )
    return I, J


def estimate_search_space(network: Network, I: IndexLike, J: IndexLike) -> int:
    """Product of the individual path counts: an upper bound on the families tried."""
    I, J = _check_pairs(network, I, J)
    return math.prod(count_paths(network, i, j) for i, j in zip(I, J))


def iter_disjoint_families(
    network: Network,
    I: IndexLike,
    J: IndexLike,
    force: bool = False,
    guard: Optional[int] = None,
) -> Iterator[PathFamily]:
    """Backtracking search; paths for each pair are generated lazily around the vertices already used."""
    I, J = _check_pairs(network, I, J)
    limit = guard or settings.FAMILY_GUARD
    estimate = estimate_search_space(network, I, J)
    if estimate > limit and not guard_lifted(force):
        logger.warning(
            f"family search {I}x{J} refused",
            extra={"estimate": str(estimate), "limit": limit},
        )
        raise GuardError(
            f"estimated {estimate} path combinations for {I}x{J} exceed the guard of {limit}",
            guard="FAMILY_GUARD",
            limit=limit,
            estimate=estimate,
        )

    pairs = list(zip(I, J))
    chosen: List[Path] = []
    occupied: Set[str] = set()

    def extend(t: int) -> Iterator[PathFamily]:
        if t == len(pairs):
            yield PathFamily(tuple(chosen))
            return
        i, j = pairs[t]
        for path in iter_paths(network, i, j, avoid=frozenset(occupied)):
            chosen.append(path)
            occupied.update(path.vertices)
            yield from extend(t + 1)
            occupied.difference_update(path.vertices)
            chosen.pop()

    yield from extend(0)


def enumerate_disjoint_families(
    network: Network,
    I: IndexLike,
    J: IndexLike,
    force: bool = False,
    guard: Optional[int] = None,
) -> List[PathFamily]:
    return list(iter_disjoint_families(network, I, J, force=force, guard=guard))


def family_weight_sum(
    network: Network,
    I: IndexLike,
    J: IndexLike,
    force: bool = False,
    guard: Optional[int] = None,
) -> int:
    """Sum over disjoint families of the product of their path weights."""
    return sum(f.weight(network) for f in iter_disjoint_families(network, I, J, force=force, guard=guard))


def verify_lindstrom(
    network: Network,
    I: IndexLike,
    J: IndexLike,
    reference: Optional[ExactMatrix] = None,
    force: bool = False,
    guard: Optional[int] = None,
) -> LindstromReport:
    """Compare a minor with the disjoint-family weight sum.

    The minor is taken from `reference` when given, otherwise from the
    network's own weight matrix. A mismatch is reported, not raised.
    """
    I, J = _check_pairs(network, I, J)
    matrix = reference if reference is not None else weight_matrix(network)
    minor = minor_value(matrix, I, J)

    family_sum = 0
    family_count = 0
    for family in iter_disjoint_families(network, I, J, force=force, guard=guard):
        family_sum += family.weight(network)
        family_count += 1

    equal = minor == family_sum
    if not equal:
        logger.warning(
            f"Lindstrom identity falsified for {I}x{J}",
            extra={"minor": str(minor), "family_sum": str(family_sum)},
        )
    return LindstromReport(
        I=list(I),
        J=list(J),
        minor=minor,
        family_sum=family_sum,
        equal=equal,
        family_count=family_count,
    )


def verify_lindstrom_exhaustive(
    network: Network,
    max_size: int,
    reference: Optional[ExactMatrix] = None,
    force: bool = False,
    guard: Optional[int] = None,
) -> LindstromSummary:
    """Every (I, J) with 1 <= |I| = |J| <= max_size, in lexicographic order."""
    if isinstance(max_size, bool) or not isinstance(max_size, int) or not 1 <= max_size <= network.n:
        raise ParameterError(f"max_size must lie in 1..{network.n}, got {max_size!r}")
    matrix = reference if reference is not None else weight_matrix(network)

    checked = 0
    failures = []
    for size in range(1, max_size + 1):
        for I in all_index_sets(network.n, size):
            for J in all_index_sets(network.n, size):
                report = verify_lindstrom(network, I, J, reference=matrix, force=force, guard=guard)
                checked += 1
                if not report.equal:
                    failures.append(report)

    logger.info(
        f"Lindstrom check over {checked} index pairs",
        extra={"n": network.n, "max_size": max_size, "failures": len(failures)},
    )
    return LindstromSummary(
        n=network.n,
        max_size=max_size,
        pairs_checked=checked,
        all_equal=not failures,
        failures=failures,
    )
