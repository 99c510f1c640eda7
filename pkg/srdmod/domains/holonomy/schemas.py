# srdmod/domains/holonomy/schemas.py
from typing import List, Optional

from pydantic import BaseModel

from srdmod.core.schemas import CheckResult


class BernsteinLevel(BaseModel):
    i: int
    dim: int


class GrowthReport(BaseModel):
    """dims[i] <= C * i^r for 1 <= i <= i_max; exact rationals as strings"""
    dims: List[int]
    r: int
    C: str
    leading: str
    leading_stable: bool
    length_bound: str
    check: CheckResult


class DivisibilityReport(BaseModel):
    f: str
    j: int
    s: int
    variable: str
    quotient: Optional[str] = None
    degree: Optional[int] = None
    bound: int
    check: CheckResult


class HolonomyReport(BaseModel):
    levels: List[BernsteinLevel]
    r_filtration: GrowthReport
    filtration_law: CheckResult
    rf_filtration: Optional[CheckResult] = None
    rf_growth: Optional[GrowthReport] = None
