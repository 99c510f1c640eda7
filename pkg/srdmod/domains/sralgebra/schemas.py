# srdmod/domains/sralgebra/schemas.py
from typing import List

from pydantic import BaseModel


class HilbertData(BaseModel):
    """f-vector (entry s counts faces of cardinality s), H(R, j), H_1(R, i) and dim R"""
    f_vector: List[int]
    H: List[int]
    H1: List[int]
    r: int


class IdealReport(BaseModel):
    generators: List[str]
    minimal_primes: List[List[str]]


class HilbertReport(BaseModel):
    j_max: int
    data: HilbertData
