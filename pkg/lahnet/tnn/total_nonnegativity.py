"""
Total non-negativity (every minor >= 0) and total positivity (every minor > 0)
by exhaustive minor enumeration.

Minors are visited by size, then row set, then column set, each in
lexicographic order, so the first failing minor is reproducible.
"""
import logging
from typing import Iterator, Optional, Tuple

from lahnet.config import guard_lifted, settings
from lahnet.linalg.determinant import minor_value
from lahnet.linalg.integers import binomial
from lahnet.linalg.matrix import ExactMatrix, IndexSet, all_index_sets
from lahnet.tnn.models import MinorWitness, SignMode, TnnReport
from lahnet.utils.errors import DimensionError, GuardError

logger = logging.getLogger(__name__)


def minor_count(m: int) -> int:
    """Number of square minors of an m x m matrix: sum over p of C(m, p)^2 = C(2m, m) - 1."""
    return binomial(2 * m, m) - 1


def iter_minors(M: ExactMatrix) -> Iterator[Tuple[IndexSet, IndexSet, int]]:
    """(I, J, minor) for every square minor in (size, I, J) order."""
    for size in range(1, min(M.rows, M.cols) + 1):
        for I in all_index_sets(M.rows, size):
            for J in all_index_sets(M.cols, size):
                yield I, J, minor_value(M, I, J)


def _scan(M: ExactMatrix, mode: SignMode, force: bool, max_dimension: Optional[int]) -> TnnReport:
    if not M.is_square:
        raise DimensionError(
            f"total non-negativity check needs a square matrix, got {M.rows}x{M.cols}",
            rows=M.rows,
            cols=M.cols,
        )
    limit = max_dimension or settings.TNN_MAX_DIMENSION
    if M.rows > limit and not guard_lifted(force):
        estimate = minor_count(M.rows)
        logger.warning(f"minor scan of a {M.rows}x{M.rows} matrix refused", extra={"minors": estimate})
        raise GuardError(
            f"{M.rows}x{M.rows} matrix has {estimate} minors; dimension limit is {limit}",
            guard="TNN_MAX_DIMENSION",
            limit=limit,
            estimate=estimate,
        )

    checked = 0
    for I, J, value in iter_minors(M):
        checked += 1
        failed = value < 0 if mode == SignMode.NONNEGATIVE else value <= 0
        if failed:
            logger.info(
                f"minor {I}x{J} = {value} fails the {mode.value} check",
                extra={"checked": checked},
            )
            return TnnReport(
                rows=M.rows,
                cols=M.cols,
                mode=mode,
                checked_minor_count=checked,
                is_tnn=False,
                witness=MinorWitness(I=list(I), J=list(J), value=value),
            )

    logger.info(f"all {checked} minors are {mode.value}", extra={"dimension": M.rows})
    return TnnReport(rows=M.rows, cols=M.cols, mode=mode, checked_minor_count=checked, is_tnn=True)


def is_totally_nonnegative(
    M: ExactMatrix, force: bool = False, max_dimension: Optional[int] = None
) -> TnnReport:
    """Certify every minor >= 0, or stop at the first negative one."""
    return _scan(M, SignMode.NONNEGATIVE, force, max_dimension)


def is_totally_positive(
    M: ExactMatrix, force: bool = False, max_dimension: Optional[int] = None
) -> TnnReport:
    """Certify every minor > 0, or stop at the first minor <= 0."""
    return _scan(M, SignMode.POSITIVE, force, max_dimension)
