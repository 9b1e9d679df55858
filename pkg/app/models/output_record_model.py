from fractions import Fraction
from typing import List, Optional
from pydantic import BaseModel, ConfigDict, Field, field_validator

class OutputRecord(BaseModel):
    """One coefficient; partitions dot-joined, values as exact rational text."""
    model_config = ConfigDict(populate_by_name=True)

    lambda_: str = Field(..., alias="lambda", description="Row partition, e.g. 3.1.1")
    mu: Optional[str] = Field(None, description="Column partition; null for single-index series")
    value: str = Field(..., description="Integer text or p/q")

    @field_validator("value")
    @classmethod
    def value_is_rational(cls, value: str) -> str:
        Fraction(value)
        return value

class TableResponseModel(BaseModel):
    n: int
    kind: str
    entries: List[OutputRecord] = []
