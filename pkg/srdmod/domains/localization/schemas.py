# srdmod/domains/localization/schemas.py
from typing import List

from pydantic import BaseModel


class SaturationReport(BaseModel):
    f: str
    degree: int
    saturation: List[str]
    sat_exponent: int


class FractionReport(BaseModel):
    numerator: str
    power: int
    text: str


class ActReport(BaseModel):
    context: SaturationReport
    operator: str
    fraction: FractionReport
    result: FractionReport


class CechEntry(BaseModel):
    j: int
    multidegree: List[int]
    dim: int


class CandidatePrime(BaseModel):
    """Monomial prime annihilating a cohomology class inside the box"""
    j: int
    prime: List[str]
    multidegree: List[int]


class CechReport(BaseModel):
    generators: List[str]
    box: List[int]
    square_zero: bool
    entries: List[CechEntry]
    candidate_primes: List[CandidatePrime]
    heuristic: bool = True
