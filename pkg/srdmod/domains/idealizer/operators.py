# srdmod/domains/idealizer/operators.py
from functools import lru_cache

from srdmod.core.bits import Exponent, support
from srdmod.core.errors import DomainError
from srdmod.domains.complex.schemas import Face, SimplicialComplex
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.sralgebra.service import SRAlgebraService
from srdmod.domains.weyl.operators import DiffOp


@lru_cache(maxsize=65536)
def traves_by_support(complex_: SimplicialComplex, a_support: Face, t_support: Face) -> bool:
    """For every minimal prime P: supp(a) meets P or supp(t) misses P"""
    return all(
        a_support & prime or not t_support & prime
        for prime in SRAlgebraService.minimal_primes(complex_)
    )


def traves_member(a: Exponent, t: Exponent, complex_: SimplicialComplex) -> bool:
    return traves_by_support(complex_, support(a), support(t))


class DROperator:
    """Operator on R = K[complex], kept as a filtered normal form with face-supported x-part"""

    __slots__ = ("op", "complex")

    def __init__(self, op: DiffOp, complex_: SimplicialComplex, check: bool = True):
        if op.n != complex_.n:
            raise DomainError(f"Operator on {op.n} variables for a complex on {complex_.n} vertices")
        faces = ComplexService.face_set(complex_)
        # Quotient by I_complex * D_S
        self.op = DiffOp(op.field, op.n, {(a, t): c for (a, t), c in op.terms.items() if support(a) in faces})
        self.complex = complex_
        if check:
            for a, t in self.op.terms:
                if not traves_member(a, t, complex_):
                    raise DomainError(f"x^{a} d^[{t}] does not preserve the face ideal")

    def __eq__(self, other) -> bool:
        if not isinstance(other, DROperator):
            return NotImplemented
        return self.complex == other.complex and self.op == other.op

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.op)

    def __repr__(self) -> str:
        return f"DROperator({self.op.format(self.complex.labels)})"
