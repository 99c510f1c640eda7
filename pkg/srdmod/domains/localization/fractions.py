# srdmod/domains/localization/fractions.py
from typing import Optional

from sympy.polys.domains.domain import Domain
from sympy.polys.rings import PolyElement

from srdmod.core.bits import Exponent
from srdmod.core.errors import DomainError
from srdmod.domains.complex.schemas import SimplicialComplex
from srdmod.domains.sralgebra.monomial import MonomialIdeal


class LocalizedContext:
    """R_f for one denominator f, with J = 0 :_R f^inf lifted to the face ideal's ring"""

    __slots__ = ("complex", "field", "f", "f_exponent", "degree", "saturation", "sat_exponent")

    def __init__(self, complex_: SimplicialComplex, field: Domain, f: PolyElement,
                 f_exponent: Optional[Exponent], saturation: MonomialIdeal, sat_exponent: int):
        self.complex = complex_
        self.field = field
        self.f = f
        # None when f is not a monomial (polynomial ring only)
        self.f_exponent = f_exponent
        self.degree = max((sum(m) for m in f.keys()), default=0)
        self.saturation = saturation
        self.sat_exponent = sat_exponent

    @property
    def ring(self):
        return self.f.ring

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LocalizedContext)
            and self.complex == other.complex
            and self.field == other.field
            and self.f == other.f
        )

    def __hash__(self) -> int:
        return hash((self.complex, self.field, tuple(sorted(self.f.items()))))


class Fraction:
    """g / f^k in canonical form: g reduced modulo J and not a multiple of f unless k = 0"""

    __slots__ = ("ctx", "numerator", "power")

    def __init__(self, ctx: LocalizedContext, numerator: PolyElement, power: int):
        if power < 0:
            raise DomainError(f"Denominator exponent must be non-negative, got {power}")
        self.ctx = ctx
        self.numerator = numerator
        self.power = power

    def __bool__(self) -> bool:
        return bool(self.numerator)

    def __repr__(self) -> str:
        return f"Fraction({self.numerator}, {self.power})"
