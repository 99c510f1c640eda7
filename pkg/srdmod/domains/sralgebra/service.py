# srdmod/domains/sralgebra/service.py
from math import comb
from typing import List

from sympy.polys.domains.domain import Domain
from sympy.polys.rings import PolyElement, PolyRing

from srdmod.core.bits import Exponent, compositions, indicator, popcount, support
from srdmod.core.errors import DomainError
from srdmod.domains.complex.schemas import Face, SimplicialComplex
from srdmod.domains.complex.service import ComplexService, face_key
from srdmod.domains.sralgebra.monomial import MonomialIdeal
from srdmod.domains.sralgebra.polynomial import get_ring
from srdmod.domains.sralgebra.schemas import HilbertData


class SRAlgebraService:

    @staticmethod
    def ring(complex_: SimplicialComplex, field: Domain) -> PolyRing:
        """Ambient polynomial ring S over the vertex variables"""
        return get_ring(complex_.labels, field)

    @staticmethod
    def is_face_exponent(complex_: SimplicialComplex, exponent: Exponent) -> bool:
        return support(exponent) in ComplexService.face_set(complex_)

    @staticmethod
    def minimal_nonfaces(complex_: SimplicialComplex) -> List[Face]:
        faces = ComplexService.face_set(complex_)
        found = set()
        for face in faces:
            for v in range(complex_.n):
                candidate = face | (1 << v)
                if candidate in faces or candidate == face:
                    continue
                if all(candidate & ~(1 << u) in faces for u in range(complex_.n) if (candidate >> u) & 1):
                    found.add(candidate)
        return sorted(found, key=face_key)

    @staticmethod
    def face_ideal_generators(complex_: SimplicialComplex) -> List[Exponent]:
        """Minimal non-faces as squarefree exponent vectors"""
        return [indicator(complex_.n, m) for m in SRAlgebraService.minimal_nonfaces(complex_)]

    @staticmethod
    def face_ideal(complex_: SimplicialComplex) -> MonomialIdeal:
        return MonomialIdeal(complex_.n, SRAlgebraService.face_ideal_generators(complex_))

    @staticmethod
    def minimal_primes(complex_: SimplicialComplex) -> List[Face]:
        """Complements of the facets; the full simplex gives the zero ideal"""
        return sorted((complex_.full & ~h for h in complex_.facets), key=face_key)

    @staticmethod
    def prime_ideal(n: int, prime: Face) -> MonomialIdeal:
        return MonomialIdeal(n, [indicator(n, 1 << v) for v in range(n) if (prime >> v) & 1])

    @staticmethod
    def reduce(complex_: SimplicialComplex, poly: PolyElement) -> PolyElement:
        """Normal form in R: delete monomials whose support is not a face"""
        faces = ComplexService.face_set(complex_)
        return poly.ring.from_dict({m: c for m, c in poly.items() if support(m) in faces})

    @staticmethod
    def krull_dim(complex_: SimplicialComplex) -> int:
        if complex_.is_void:
            return 0
        return max(popcount(h) for h in complex_.facets)

    @staticmethod
    def hilbert(complex_: SimplicialComplex, j: int) -> int:
        """H(R, j) from the f-vector"""
        if j < 0:
            raise DomainError(f"Degree must be non-negative, got {j}")
        if j == 0:
            return 1
        f_vector = ComplexService.f_vector(complex_)
        return sum(f_vector[s] * comb(j - 1, s - 1) for s in range(1, len(f_vector)))

    @staticmethod
    def iterated_hilbert(complex_: SimplicialComplex, i: int) -> int:
        """H_1(R, i) = sum of H(R, j) for j <= i"""
        if i < 0:
            raise DomainError(f"Degree must be non-negative, got {i}")
        return sum(SRAlgebraService.hilbert(complex_, j) for j in range(i + 1))

    @staticmethod
    def count_monomials_bruteforce(complex_: SimplicialComplex, j: int) -> int:
        """Degree-j monomials with face support, counted one by one"""
        return sum(1 for e in compositions(complex_.n, j) if SRAlgebraService.is_face_exponent(complex_, e))

    @staticmethod
    def hilbert_data(complex_: SimplicialComplex, j_max: int) -> HilbertData:
        H = [SRAlgebraService.hilbert(complex_, j) for j in range(j_max + 1)]
        H1 = []
        total = 0
        for value in H:
            total += value
            H1.append(total)
        return HilbertData(
            f_vector=ComplexService.f_vector(complex_),
            H=H,
            H1=H1,
            r=SRAlgebraService.krull_dim(complex_),
        )
