from typing import List, Optional
from pydantic import BaseModel, Field

class IdentityCheck(BaseModel):
    identity: str = Field(..., description="Name of the identity being checked")
    n: int = Field(..., description="Weight the identity was checked at")
    passed: bool
    detail: Optional[str] = Field(None, description="First counterexample when the check failed")

class VerificationReport(BaseModel):
    suite: str
    checks: List[IdentityCheck] = []
    elapsed: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[IdentityCheck]:
        return [check for check in self.checks if not check.passed]

    def extend(self, checks: List[IdentityCheck]) -> "VerificationReport":
        self.checks.extend(checks)
        return self
