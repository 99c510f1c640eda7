# srdmod/domains/idealizer/service.py
import logging
from math import comb
from typing import List, Optional, Tuple

from sympy.polys.domains.domain import Domain

from srdmod.core.bits import Exponent, bounded_vectors, compositions, dominates, is_subset, support, sub
from srdmod.core.errors import DomainError
from srdmod.core.fields import characteristic
from srdmod.core.schemas import CheckResult, Verdict
from srdmod.domains.complex.schemas import SimplicialComplex, TSpaceVerdict
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.idealizer.operators import DROperator, traves_member
from srdmod.domains.idealizer.schemas import BasisMonomial, BasisReport, Factorization, TravesDisagreement
from srdmod.domains.weyl.operators import DiffOp, format_term
from srdmod.domains.weyl.service import WeylService

logger = logging.getLogger(__name__)

Pair = Tuple[Exponent, Exponent]


class IdealizerService:

    @staticmethod
    def traves_member(a: Exponent, t: Exponent, complex_: SimplicialComplex) -> bool:
        """Combinatorial test that x^a d^[t] preserves the face ideal"""
        return traves_member(tuple(a), tuple(t), complex_)

    @staticmethod
    def idealizer_oracle(a: Exponent, t: Exponent, complex_: SimplicialComplex, field: Domain) -> bool:
        """Act with x^a d^[t] on every face-ideal monomial x^v with v_i <= t_i + 1"""
        faces = ComplexService.face_set(complex_)
        for v in bounded_vectors(tuple(ti + 1 for ti in t)):
            if support(v) in faces or not dominates(v, t):
                continue
            k = 1
            for vi, ti in zip(v, t):
                k *= comb(vi, ti)
            if not field(k):
                continue
            image = tuple(x + y for x, y in zip(sub(v, t), a))
            if support(image) in faces:
                return False
        return True

    @staticmethod
    def pairs_up_to(complex_: SimplicialComplex, degree: int) -> List[Pair]:
        """(a, t) with |a| + |t| <= degree and face-supported a, by degree then lex"""
        faces = ComplexService.face_set(complex_)
        out = []
        for total in range(degree + 1):
            for da in range(total, -1, -1):
                for a in compositions(complex_.n, da):
                    if support(a) not in faces:
                        continue
                    out.extend((a, t) for t in compositions(complex_.n, total - da))
        return out

    @staticmethod
    def dr_basis_up_to(complex_: SimplicialComplex, degree: int) -> List[Pair]:
        """Monomial basis of the Bernstein level `degree` of D_R"""
        return [
            (a, t) for a, t in IdealizerService.pairs_up_to(complex_, degree)
            if traves_member(a, t, complex_)
        ]

    @staticmethod
    def xdelx_expected(complex_: SimplicialComplex, degree: int) -> List[Pair]:
        """(a, t) with supp(t) inside supp(a), supp(a) a face"""
        return [
            (a, t) for a, t in IdealizerService.pairs_up_to(complex_, degree)
            if is_subset(support(t), support(a))
        ]

    @staticmethod
    def verify_xdelx(complex_: SimplicialComplex, degree: int) -> CheckResult:
        """Basis of D_R equals the x d^t monomials on a T-space"""
        verdict = ComplexService.is_t_space(complex_)
        if verdict != TSpaceVerdict.TRUE:
            return CheckResult(verdict=Verdict.NA, details=f"T-space verdict is {verdict.value}")
        basis = set(IdealizerService.dr_basis_up_to(complex_, degree))
        expected = set(IdealizerService.xdelx_expected(complex_, degree))
        mismatches = sorted(basis ^ expected, key=lambda p: (sum(p[0]) + sum(p[1]), p))
        if not mismatches:
            return CheckResult(verdict=Verdict.PASS, details=f"{len(basis)} basis monomials")
        a, t = mismatches[0]
        return CheckResult(
            verdict=Verdict.FAIL,
            details="basis differs from x d^t monomials",
            witness={"a": list(a), "t": list(t), "in_basis": (a, t) in basis, "count": len(mismatches)},
        )

    @staticmethod
    def traves_disagreements(complex_: SimplicialComplex, degree: int, field: Domain) -> List[TravesDisagreement]:
        """Pairs where the combinatorial test and the action oracle differ"""
        out = []
        for a, t in IdealizerService.pairs_up_to(complex_, degree):
            criterion = traves_member(a, t, complex_)
            oracle = IdealizerService.idealizer_oracle(a, t, complex_, field)
            if criterion != oracle:
                out.append(TravesDisagreement(a=list(a), t=list(t), criterion=criterion, oracle=oracle))
        if out and characteristic(field):
            logger.warning(
                f"Membership criterion and action oracle disagree on {len(out)} pairs "
                f"in characteristic {characteristic(field)}"
            )
        return out

    @staticmethod
    def compose_dr(left: DROperator, right: DROperator) -> DROperator:
        """Compose in D_S, then drop terms with non-face x-support"""
        if left.complex != right.complex:
            raise DomainError("Operators on different complexes")
        return DROperator(WeylService.compose(left.op, right.op), left.complex, check=False)

    @staticmethod
    def generator_factorization(a: Exponent, t: Exponent, field: Domain) -> Optional[Factorization]:
        """x^a d^[t] as an R-monomial times commuting x_i d_i^[t_i]; None unless supp(t) lies in supp(a)"""
        n = len(a)
        if not is_subset(support(t), support(a)):
            return None
        generators = [DiffOp.xdx(field, n, i, t[i]) for i in range(n) if t[i]]
        ring_part = tuple(ai - (1 if ti else 0) for ai, ti in zip(a, t))
        product = WeylService.compose_all([DiffOp.monomial(field, n, ring_part, (0,) * n)] + generators)
        return Factorization(
            ring_monomial=list(ring_part),
            generators=[[i, t[i]] for i in range(n) if t[i]],
            exact=product == DiffOp.monomial(field, n, a, t),
        )

    @staticmethod
    def basis_report(complex_: SimplicialComplex, degree: int, field: Domain, compare: bool = False) -> BasisReport:
        basis = IdealizerService.dr_basis_up_to(complex_, degree)
        return BasisReport(
            max_degree=degree,
            characteristic=characteristic(field),
            count=len(basis),
            basis=[
                BasisMonomial(a=list(a), t=list(t), literal=format_term(complex_.labels, a, t) or "1")
                for a, t in basis
            ],
            xdelx=IdealizerService.verify_xdelx(complex_, degree),
            disagreements=IdealizerService.traves_disagreements(complex_, degree, field) if compare else None,
        )
