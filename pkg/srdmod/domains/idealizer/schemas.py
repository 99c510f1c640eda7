# srdmod/domains/idealizer/schemas.py
from typing import List, Optional

from pydantic import BaseModel

from srdmod.core.schemas import CheckResult


class BasisMonomial(BaseModel):
    a: List[int]
    t: List[int]
    literal: str


class Factorization(BaseModel):
    """x^a d^[t] = x^(a - e_T) * product of x_i d_i^[t_i] over i in T = supp(t)"""
    ring_monomial: List[int]
    generators: List[List[int]]
    exact: bool


class TravesDisagreement(BaseModel):
    a: List[int]
    t: List[int]
    criterion: bool
    oracle: bool


class BasisReport(BaseModel):
    max_degree: int
    characteristic: int
    count: int
    basis: List[BasisMonomial]
    xdelx: CheckResult
    disagreements: Optional[List[TravesDisagreement]] = None
