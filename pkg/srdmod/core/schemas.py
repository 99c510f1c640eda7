# srdmod/core/schemas.py
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    NA = "NA"


class CheckResult(BaseModel):
    """Outcome of a single claim check; FAIL always carries a witness"""
    verdict: Verdict
    details: str = ""
    witness: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.verdict != Verdict.FAIL
