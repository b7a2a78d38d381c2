import enum
from typing import List, Optional

from pydantic import Field, model_validator

from lahnet.utils.reports import BigInt, BigIntList, ReportModel


class SignMode(enum.Enum):
    NONNEGATIVE = "nonnegative"
    POSITIVE = "positive"


class MinorWitness(ReportModel):
    I: List[int]
    J: List[int]
    value: BigInt


class TnnReport(ReportModel):
    """Outcome of scanning every minor in (size, I, J) order.

    `is_tnn` says whether all scanned minors met the sign condition of
    `mode`: >= 0 for total non-negativity, > 0 for total positivity.
    """

    rows: int
    cols: int
    mode: SignMode = SignMode.NONNEGATIVE
    checked_minor_count: int
    is_tnn: bool
    witness: Optional[MinorWitness] = None

    @model_validator(mode="after")
    def _witness_iff_failed(self):
        if self.is_tnn == (self.witness is not None):
            raise ValueError("a witness is present exactly when the check fails")
        return self


class VariationViolation(ReportModel):
    x: BigIntList
    mx: BigIntList
    var_x: int
    var_mx: int


class VariationReport(ReportModel):
    """Sampled check of Var-(Mx) <= Var-(x)."""

    rows: int
    cols: int
    sample_count: int
    seed: BigInt
    generator: str
    entry_bound: int
    violations: List[VariationViolation] = Field(default_factory=list)
    max_drop: int

    @property
    def holds(self) -> bool:
        return not self.violations
