# srdmod/domains/ddm/schemas.py
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel
from sympy.polys.domains.domain import Domain

from srdmod.core.bits import Exponent, support
from srdmod.core.errors import DomainError, ParseError
from srdmod.core.fields import from_rational, to_str
from srdmod.core.schemas import CheckResult
from srdmod.domains.complex.schemas import SimplicialComplex
from srdmod.domains.complex.service import ComplexService


class RationalPoint:
    """K-rational point c whose support is a face, so (x - c) is a maximal ideal of R"""

    __slots__ = ("field", "coords")

    def __init__(self, field: Domain, coords, complex_: Optional[SimplicialComplex] = None):
        self.field = field
        self.coords = tuple(coords)
        if complex_ is not None:
            if len(self.coords) != complex_.n:
                raise DomainError(f"Point has {len(self.coords)} coordinates, complex has {complex_.n} vertices")
            if support(self.coords) not in ComplexService.face_set(complex_):
                raise DomainError(
                    f"Support {ComplexService.names(complex_, support(self.coords))} of the point is not a face"
                )

    @classmethod
    def parse(cls, text: str, field: Domain, complex_: SimplicialComplex) -> "RationalPoint":
        """Comma separated exact scalars, e.g. `1,1,0,0`"""
        parts = [p for p in text.split(",") if p.strip()]
        if not parts:
            raise ParseError("Empty point")
        return cls(field, [from_rational(field, p) for p in parts], complex_)

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalPoint) and self.field == other.field and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.field, self.coords))

    def __repr__(self) -> str:
        return f"RationalPoint({self.describe()})"

    def describe(self) -> List[str]:
        return [to_str(self.field, c) for c in self.coords]


class DdmElement:
    """Coordinates in {<t> : supp(t) a face}, <t> = product of x_i d_i^[t_i] over supp(t)"""

    __slots__ = ("field", "n", "coeffs")

    def __init__(self, field: Domain, n: int, coeffs: Optional[Dict[Exponent, object]] = None):
        self.field = field
        self.n = n
        self.coeffs = {t: c for t, c in (coeffs or {}).items() if c}

    def __eq__(self, other) -> bool:
        return isinstance(other, DdmElement) and self.field == other.field and self.coeffs == other.coeffs

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __iter__(self) -> Iterator[Tuple[Exponent, object]]:
        return iter(sorted(self.coeffs.items()))

    @property
    def is_scalar(self) -> bool:
        return all(not any(t) for t in self.coeffs)

    def scalar(self):
        return self.coeffs.get((0,) * self.n, self.field.zero)

    def coordinate(self, t: Exponent):
        return self.coeffs.get(tuple(t), self.field.zero)


class Coordinate(BaseModel):
    t: List[int]
    literal: str
    coefficient: str


class NormalFormReport(BaseModel):
    operator: str
    point: List[str]
    coordinates: List[Coordinate]
    verified: Optional[bool] = None


class FailureWitness(BaseModel):
    """Unit finding failed: g = (x - c)^t_l did not reduce g w to a nonzero scalar"""
    w: List[Coordinate]
    point: List[str]
    t_l: List[int]
    reduced: List[Coordinate]


class InverseReport(BaseModel):
    found: bool
    f: Optional[str] = None
    scalar: Optional[str] = None
    verified: Optional[bool] = None
    witness: Optional[FailureWitness] = None


class RankReport(BaseModel):
    max_order: int
    truncation: int
    count: int
    rank: int
    check: CheckResult


class FiltDimReport(BaseModel):
    i_max: int
    dims: List[int]
    expected: List[int]
    check: CheckResult
