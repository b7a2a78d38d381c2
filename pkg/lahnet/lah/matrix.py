import logging
from dataclasses import dataclass

from lahnet.lah.models import EnumerationReport, RouteMismatch
from lahnet.lah.numbers import (
    LahTable,
    check_enumeration_guard,
    lah_closed_form,
    lah_enumerate,
    lah_recurrence_table,
)
from lahnet.linalg.integers import binomial, factorial
from lahnet.linalg.matrix import ExactMatrix
from lahnet.utils.errors import InvariantViolation, ParameterError

logger = logging.getLogger(__name__)


def _require_positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ParameterError(f"{name} must be a positive integer, got {value!r}")


@dataclass(frozen=True)
class LahMatrix:
    """LM_m: entry (i, j) is L(i, j) for 1 <= i, j <= m."""

    m: int
    matrix: ExactMatrix

    def __post_init__(self):
        M = self.matrix
        if M.rows != self.m or M.cols != self.m:
            raise InvariantViolation(f"LM_{self.m} has shape {M.rows}x{M.cols}")
        if not M.is_lower_triangular():
            raise InvariantViolation(f"LM_{self.m} is not lower triangular")
        if any(d != 1 for d in M.diagonal()):
            raise InvariantViolation(f"LM_{self.m} has a diagonal entry other than 1")
        if M[self.m, 1] != factorial(self.m):
            raise InvariantViolation(f"L({self.m}, 1) = {M[self.m, 1]} is not {self.m}!")

    def __getitem__(self, position):
        return self.matrix[position]


def lah_matrix(m: int) -> LahMatrix:
    """LM_m from the recurrence, cross-checked entry by entry against the closed form."""
    _require_positive("m", m)
    table = lah_recurrence_table(m)
    rows = []
    for i in range(1, m + 1):
        row = []
        for j in range(1, m + 1):
            value = table[i][j] if j <= i else 0
            expected = lah_closed_form(i, j)
            if value != expected:
                logger.error(
                    "recurrence and closed form disagree",
                    extra={"i": i, "j": j, "recurrence": str(value), "closed_form": str(expected)},
                )
                raise InvariantViolation(
                    f"L({i}, {j}): recurrence gives {value}, closed form gives {expected}",
                    i=i,
                    j=j,
                    recurrence=value,
                    closed_form=expected,
                )
            row.append(value)
        rows.append(row)
    return LahMatrix(m=m, matrix=ExactMatrix.from_rows(rows))


def pascal_matrix(m: int) -> ExactMatrix:
    """Lower-triangular binomial matrix, entry (i, j) = C(i-1, j-1)."""
    _require_positive("m", m)
    return ExactMatrix.from_rows(
        [[binomial(i - 1, j - 1) for j in range(1, m + 1)] for i in range(1, m + 1)]
    )


def format_triangle(table: LahTable, start: int = 1) -> str:
    """Plain-text triangle, one line "n: L(n,1) ... L(n,n)" per row from `start`."""
    lines = []
    for n in range(start, len(table)):
        values = " ".join(str(v) for v in table[n][1:]) if n else str(table[0][0])
        lines.append(f"{n}: {values}")
    return "\n".join(lines)


def check_triple_agreement(n_max: int, force: bool = False) -> EnumerationReport:
    """Recurrence, closed form and enumeration for every 0 <= k <= n <= n_max."""
    check_enumeration_guard(n_max, force)
    table = lah_recurrence_table(n_max)
    mismatches = []
    checked = 0
    for n in range(n_max + 1):
        for k in range(n + 1):
            recurrence = table[n][k]
            closed = lah_closed_form(n, k)
            counted = lah_enumerate(n, k, force=force)
            checked += 1
            if not recurrence == closed == counted:
                mismatches.append(
                    RouteMismatch(n=n, k=k, recurrence=recurrence, closed_form=closed, enumeration=counted)
                )
    if mismatches:
        logger.warning(f"{len(mismatches)} Lah entries disagree across routes", extra={"n_max": n_max})
    else:
        logger.info(f"triple agreement holds for n <= {n_max}", extra={"entries": checked})
    return EnumerationReport(n_max=n_max, entries_checked=checked, agree=not mismatches, mismatches=mismatches)
