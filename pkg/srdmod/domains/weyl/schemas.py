# srdmod/domains/weyl/schemas.py
from typing import List

from pydantic import BaseModel


class CommutatorFinding(BaseModel):
    left: str
    right: str
    commutator: str


class CommutationReport(BaseModel):
    """Cross-variable commutation (asserted) and same-variable commutators (recorded)"""
    n: int
    max_order: int
    cross_variable_ok: bool
    cross_variable_failures: List[CommutatorFinding]
    same_variable_findings: List[CommutatorFinding]
