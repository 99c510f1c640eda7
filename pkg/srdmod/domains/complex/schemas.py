# srdmod/domains/complex/schemas.py
from enum import Enum
from typing import List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field

# A face is a vertex subset stored as a bit-vector
Face = int


class TSpaceVerdict(str, Enum):
    TRUE = "true"
    FALSE = "false"
    NOT_APPLICABLE = "not_applicable"


class SimplicialComplex(BaseModel):
    """Facet antichain over n labeled vertices, facets in canonical order"""
    model_config = ConfigDict(frozen=True)

    n: int
    facets: Tuple[Face, ...]
    labels: Tuple[str, ...]
    slack: Tuple[str, ...] = ()

    @property
    def full(self) -> Face:
        return (1 << self.n) - 1

    @property
    def is_full_simplex(self) -> bool:
        return len(self.facets) == 1 and self.facets[0] == self.full

    @property
    def is_void(self) -> bool:
        return self.n == 0


class ComplexFile(BaseModel):
    """On-disk JSON form; facet members are 0-based indices or labels"""
    n: int = Field(ge=0)
    labels: Optional[List[str]] = None
    facets: List[List[Union[int, str]]]


class ComplexSummary(BaseModel):
    n: int
    labels: List[str]
    facets: List[List[str]]
    slack: List[str]
    f_vector: List[int]
    face_count: int


class TSpaceReport(BaseModel):
    t_space: Optional[bool]
    verdict: TSpaceVerdict
    witness: Optional[dict] = None
