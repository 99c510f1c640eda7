# srdmod/domains/verification/schemas.py
from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel

from srdmod.core.schemas import Verdict


class GenerationMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class VerifyRecord(BaseModel):
    check: str
    claim: str
    instance: Dict[str, Any]
    instance_hash: str
    verdict: Verdict
    details: str = ""
    witness: Optional[Dict[str, Any]] = None


class VerifySummary(BaseModel):
    PASS: int = 0
    FAIL: int = 0
    NA: int = 0


class VerifyReport(BaseModel):
    version: str
    seed: int
    characteristic: int
    max_degree: int
    summary: VerifySummary
    records: List[VerifyRecord]

    @property
    def failed(self) -> bool:
        return self.summary.FAIL > 0
