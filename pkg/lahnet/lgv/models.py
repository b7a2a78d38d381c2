from typing import List

from pydantic import Field

from lahnet.utils.reports import BigInt, ReportModel


class LindstromReport(ReportModel):
    """A minor of the weight matrix next to the weight of the disjoint path families it should count."""

    I: List[int]
    J: List[int]
    minor: BigInt
    family_sum: BigInt
    equal: bool
    family_count: int


class LindstromSummary(ReportModel):
    """Result of checking every (I, J) with |I| = |J| <= max_size."""

    n: int
    max_size: int
    pairs_checked: int
    all_equal: bool
    failures: List[LindstromReport] = Field(default_factory=list)
