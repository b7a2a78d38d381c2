from typing import Annotated, List

from pydantic import BaseModel, ConfigDict, PlainSerializer

# Integers serialize to JSON as decimal strings
BigInt = Annotated[int, PlainSerializer(lambda v: str(v), return_type=str, when_used="json")]
BigIntList = List[BigInt]


class ReportModel(BaseModel):
    """Immutable result document with deterministic JSON output."""

    model_config = ConfigDict(frozen=True)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2)
