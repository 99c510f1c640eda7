# srdmod/domains/localization/service.py
import logging
from typing import List, Sequence, Tuple

import sympy
from sympy.polys.domains.domain import Domain
from sympy.polys.rings import PolyElement

from srdmod.core.bits import Exponent, compositions_up_to, is_subset, support, unit
from srdmod.core.errors import DomainError, ParseError, PreconditionError
from srdmod.domains.complex.schemas import SimplicialComplex
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.localization.cech import CechComplex, candidate_primes, cohomology_table
from srdmod.domains.localization.fractions import Fraction, LocalizedContext
from srdmod.domains.localization.schemas import CandidatePrime, CechEntry, CechReport, FractionReport, SaturationReport
from srdmod.domains.sralgebra.monomial import MonomialIdeal
from srdmod.domains.sralgebra.polynomial import (
    format_monomial, format_polynomial, from_expression, parse_expression
)
from srdmod.domains.sralgebra.service import SRAlgebraService
from srdmod.domains.weyl.operators import DiffOp
from srdmod.domains.weyl.service import WeylService

logger = logging.getLogger(__name__)


class LocalizationService:

    @staticmethod
    def saturate(complex_: SimplicialComplex, f: PolyElement) -> LocalizedContext:
        """Context for R_f: J = 0 :_R f^inf by iterated monomial colon"""
        if not f:
            raise DomainError("Cannot localize at 0")
        field = f.ring.domain
        face_ideal = SRAlgebraService.face_ideal(complex_)
        if len(f.terms()) == 1:
            exponent = tuple(next(iter(f.keys())))
            if support(exponent) not in ComplexService.face_set(complex_):
                raise DomainError(f"{format_polynomial(f)} is zero in the Stanley-Reisner ring")
            saturation, k = face_ideal.saturate(exponent)
            logger.debug(f"0 : f^inf stabilizes after {k} colon steps")
            return LocalizedContext(complex_, field, f, exponent, saturation, k)
        if not face_ideal.is_zero:
            raise DomainError("Non-monomial denominators are supported over the polynomial ring only")
        return LocalizedContext(complex_, field, f, None, face_ideal, 0)

    @staticmethod
    def context(complex_: SimplicialComplex, text: str, field: Domain) -> LocalizedContext:
        f = from_expression(parse_expression(text, complex_.labels), complex_.labels, field)
        return LocalizationService.saturate(complex_, f)

    @staticmethod
    def saturation_of_ideal(complex_: SimplicialComplex, generators: Sequence[Exponent]) -> MonomialIdeal:
        """0 :_R I^inf for a monomial ideal I, lifted to contain the face ideal"""
        face_ideal = SRAlgebraService.face_ideal(complex_)
        return MonomialIdeal.intersect_all(complex_.n, [face_ideal.saturate(tuple(g))[0] for g in generators])

    @staticmethod
    def reduce(ctx: LocalizedContext, poly: PolyElement) -> PolyElement:
        """Delete monomials of the saturation ideal"""
        return poly.ring.from_dict({m: c for m, c in poly.items() if not ctx.saturation.contains(m)})

    @staticmethod
    def fraction(ctx: LocalizedContext, numerator: PolyElement, power: int = 0) -> Fraction:
        """Canonical g / f^k: cancel f from the numerator while possible"""
        g = LocalizationService.reduce(ctx, numerator)
        while power and g:
            quotient, remainder = g.div(ctx.f)
            if remainder:
                break
            g = LocalizationService.reduce(ctx, quotient)
            power -= 1
        return Fraction(ctx, g, power if g else 0)

    @staticmethod
    def frac_equal(u: Fraction, v: Fraction) -> bool:
        ctx = u.ctx
        cross = u.numerator * ctx.f ** v.power - v.numerator * ctx.f ** u.power
        return not LocalizationService.reduce(ctx, cross)

    @staticmethod
    def frac_add(u: Fraction, v: Fraction) -> Fraction:
        ctx = u.ctx
        power = max(u.power, v.power)
        numerator = u.numerator * ctx.f ** (power - u.power) + v.numerator * ctx.f ** (power - v.power)
        return LocalizationService.fraction(ctx, numerator, power)

    @staticmethod
    def frac_sub(u: Fraction, v: Fraction) -> Fraction:
        return LocalizationService.frac_add(u, Fraction(v.ctx, -v.numerator, v.power))

    @staticmethod
    def frac_mul_poly(u: Fraction, poly: PolyElement) -> Fraction:
        return LocalizationService.fraction(u.ctx, poly * u.numerator, u.power)

    @staticmethod
    def act(i: int, t: int, u: Fraction) -> Fraction:
        """x_i d_i^[t] on g / f^j via the quotient rule

        f^j * x d^[t](g / f^j) = x d^[t](g) - sum over 1 <= s <= t of d^[s](f^j) * x d^[t-s](g / f^j),
        with x d^[0] the multiplication by x_i.
        """
        ctx = u.ctx
        ring, n = ctx.ring, ctx.complex.n
        if t == 0:
            return LocalizationService.frac_mul_poly(u, ring.gens[i])
        generator = DiffOp.xdx(ctx.field, n, i, t)
        if not u.power:
            return LocalizationService.fraction(ctx, WeylService.apply(generator, u.numerator), 0)
        f_power = ctx.f ** u.power
        result = LocalizationService.fraction(ctx, WeylService.apply(generator, u.numerator), u.power)
        for s in range(1, t + 1):
            derivative = WeylService.apply(DiffOp.divided_power(ctx.field, n, unit(n, i, s)), f_power)
            if not derivative:
                continue
            inner = LocalizationService.act(i, t - s, u)
            term = LocalizationService.fraction(ctx, derivative * inner.numerator, u.power + inner.power)
            result = LocalizationService.frac_sub(result, term)
        return result

    @staticmethod
    def act_operator(op: DiffOp, u: Fraction) -> Fraction:
        """Operator in D_R acting term by term through its x_i d_i^[t_i] factorization"""
        ctx = u.ctx
        faces = ComplexService.face_set(ctx.complex)
        result = Fraction(ctx, ctx.ring.zero, 0)
        for (a, t), c in op.terms.items():
            if support(a) not in faces:
                continue
            if not is_subset(support(t), support(a)):
                raise PreconditionError(
                    f"Term with x-part {list(a)} and d-part {list(t)} does not factor into x_i d_i^[t] generators"
                )
            value = u
            for i, ti in enumerate(t):
                if ti:
                    value = LocalizationService.act(i, ti, value)
            ring_part = tuple(ai - (1 if ti else 0) for ai, ti in zip(a, t))
            value = LocalizationService.frac_mul_poly(value, ctx.ring.term_new(ring_part, c))
            result = LocalizationService.frac_add(result, value)
        return result

    @staticmethod
    def parse_fraction(ctx: LocalizedContext, text: str) -> Fraction:
        """Literal `g/f^k`; the denominator must be a scalar multiple of a power of f"""
        labels = ctx.complex.labels
        expr = sympy.together(parse_expression(text, labels))
        num_expr, den_expr = sympy.fraction(expr)
        numerator = from_expression(num_expr, labels, ctx.field)
        denominator = from_expression(den_expr, labels, ctx.field)
        if not denominator:
            raise ParseError(f"Zero denominator in {text!r}")
        power = 0
        while not denominator.is_ground:
            quotient, remainder = denominator.div(ctx.f)
            if remainder or not ctx.degree:
                raise ParseError(f"Denominator of {text!r} is not a power of {format_polynomial(ctx.f)}")
            denominator = quotient
            power += 1
        scale = ctx.field.revert(denominator.LC)
        return LocalizationService.fraction(ctx, numerator * scale, power)

    @staticmethod
    def to_text(u: Fraction) -> str:
        numerator = format_polynomial(u.numerator)
        if not u.power:
            return numerator
        f = format_polynomial(u.ctx.f)
        return f"({numerator})/({f})" + (f"^{u.power}" if u.power > 1 else "")

    @staticmethod
    def describe(u: Fraction) -> FractionReport:
        return FractionReport(numerator=format_polynomial(u.numerator), power=u.power, text=LocalizationService.to_text(u))

    @staticmethod
    def saturation_report(ctx: LocalizedContext) -> SaturationReport:
        return SaturationReport(
            f=format_polynomial(ctx.f),
            degree=ctx.degree,
            saturation=[format_monomial(ctx.complex.labels, g) for g in ctx.saturation.generators],
            sat_exponent=ctx.sat_exponent,
        )

    @staticmethod
    def polynomials_up_to(ctx: LocalizedContext, degree: int) -> List[PolyElement]:
        """Monomial basis of (R / J) in degrees <= degree"""
        return [
            ctx.ring.term_new(m, ctx.field.one)
            for m in compositions_up_to(ctx.complex.n, degree)
            if not ctx.saturation.contains(m)
        ]

    @staticmethod
    def cech_cohomology(complex_: SimplicialComplex, generators: Sequence[Exponent], field: Domain,
                        box: Tuple[int, int]) -> Tuple[CechComplex, List[Tuple[int, Exponent, int]], bool]:
        """Nonzero H^j dimensions per multidegree of the box, and the d o d = 0 flag"""
        lo, hi = box
        if lo > hi:
            raise DomainError(f"Empty box {lo}:{hi}")
        cech = CechComplex(complex_, generators, field)
        entries, square_zero = cohomology_table(cech, box)
        return cech, entries, square_zero

    @staticmethod
    def candidate_ass_primes(cech: CechComplex, j: int, entries: List[Tuple[int, Exponent, int]],
                             box: Tuple[int, int]) -> List[Tuple[int, Exponent]]:
        """Box-bounded candidates for associated primes of H^j; detection is not complete"""
        return candidate_primes(cech, j, entries, box)

    @staticmethod
    def cech_report(complex_: SimplicialComplex, generators: Sequence[Exponent], field: Domain,
                    box: Tuple[int, int]) -> CechReport:
        cech, entries, square_zero = LocalizationService.cech_cohomology(complex_, generators, field, box)
        primes = []
        for j in range(cech.length + 1):
            for prime, m in LocalizationService.candidate_ass_primes(cech, j, entries, box):
                primes.append(CandidatePrime(j=j, prime=ComplexService.names(complex_, prime), multidegree=list(m)))
        if primes:
            logger.info(f"{len(primes)} candidate associated primes inside the box {list(box)}")
        return CechReport(
            generators=[format_monomial(complex_.labels, g) for g in generators],
            box=list(box),
            square_zero=square_zero,
            entries=[CechEntry(j=j, multidegree=list(m), dim=dim) for j, m, dim in entries],
            candidate_primes=primes,
        )
