from typing import List, Optional

from lahnet.utils.reports import BigInt, BigIntList, ReportModel


class CoefficientDifference(ReportModel):
    degree: int
    lhs: BigInt
    rhs: BigInt


class IdentityReport(ReportModel):
    """Rising factorial versus the Lah-weighted sum of falling factorials."""

    n: int
    holds: bool
    lhs: BigIntList
    rhs: BigIntList
    first_difference: Optional[CoefficientDifference] = None
    points_agree: bool


class RouteMismatch(ReportModel):
    n: int
    k: int
    recurrence: BigInt
    closed_form: BigInt
    enumeration: BigInt


class EnumerationReport(ReportModel):
    """Agreement of recurrence, closed form and enumeration over 0 <= k <= n <= n_max."""

    n_max: int
    entries_checked: int
    agree: bool
    mismatches: List[RouteMismatch] = []
