import logging
from typing import List

from lahnet.config import guard_lifted, settings
from lahnet.linalg.matrix import ExactMatrix, IndexLike, as_index_set, submatrix
from lahnet.utils.errors import DimensionError, GuardError

logger = logging.getLogger(__name__)


def _require_square(M: ExactMatrix) -> None:
    if not M.is_square:
        raise DimensionError(
            f"determinant needs a square matrix, got {M.rows}x{M.cols}",
            rows=M.rows,
            cols=M.cols,
        )


def determinant(M: ExactMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Every intermediate value is an integer: the division by the previous
    pivot is exact at each step. The 0x0 determinant is 1.
    """
    _require_square(M)
    n = M.rows
    if n == 0:
        return 1

    a: List[List[int]] = M.to_rows()
    sign = 1
    previous_pivot = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            # swap in a row with a nonzero entry in column k
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // previous_pivot
            a[i][k] = 0
        previous_pivot = pivot
    return sign * a[n - 1][n - 1]


def determinant_laplace(M: ExactMatrix, force: bool = False) -> int:
    """Cofactor expansion along the first row.

    Cross-check for `determinant`; refused above LAPLACE_MAX_DIMENSION
    unless forced.
    """
    _require_square(M)
    limit = settings.LAPLACE_MAX_DIMENSION
    if M.rows > limit and not guard_lifted(force):
        raise GuardError(
            f"Laplace expansion of a {M.rows}x{M.rows} matrix exceeds the limit of {limit}",
            guard="LAPLACE_MAX_DIMENSION",
            limit=limit,
            estimate=M.rows,
        )
    return _laplace(M.to_rows())


def _laplace(rows: List[List[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, value in enumerate(rows[0]):
        if value == 0:
            continue
        cofactor = [row[:j] + row[j + 1:] for row in rows[1:]]
        total += (-1) ** j * value * _laplace(cofactor)
    return total


def minor_value(M: ExactMatrix, I: IndexLike, J: IndexLike) -> int:
    """Minor with rows I and columns J; the empty minor is 1."""
    I, J = as_index_set(I), as_index_set(J)
    value = determinant(submatrix(M, I, J))
    logger.debug(f"minor {I}x{J} = {value}")
    return value
