# srdmod/domains/ddm/service.py
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Tuple, Union

from sympy.polys.rings import PolyElement

from srdmod.core.bits import Exponent, compositions_up_to, indicator, is_subset, sub, support, unit, zero
from srdmod.core.config import settings
from srdmod.core.errors import PreconditionError
from srdmod.core.fields import to_str
from srdmod.core.linalg import dependency, in_span, rank
from srdmod.core.schemas import CheckResult, Verdict
from srdmod.domains.complex.schemas import SimplicialComplex
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.ddm.schemas import (
    Coordinate, DdmElement, FailureWitness, FiltDimReport, InverseReport, RankReport, RationalPoint
)
from srdmod.domains.idealizer.service import IdealizerService
from srdmod.domains.sralgebra.polynomial import format_polynomial, get_ring
from srdmod.domains.sralgebra.service import SRAlgebraService
from srdmod.domains.weyl.operators import DiffOp, format_term
from srdmod.domains.weyl.service import WeylService

logger = logging.getLogger(__name__)


def bracket(n: int, t: Exponent) -> Tuple[Exponent, Exponent]:
    """<t> = x^(e_T) d^[t] with T = supp(t)"""
    return indicator(n, support(t)), tuple(t)


def reduce_op(op: DiffOp, complex_: SimplicialComplex) -> DiffOp:
    """Image in D_R: drop terms whose x-part is not face-supported"""
    faces = ComplexService.face_set(complex_)
    return DiffOp(op.field, op.n, {(a, t): c for (a, t), c in op.terms.items() if support(a) in faces})


@lru_cache(maxsize=32)
def dm_generators(complex_: SimplicialComplex, point: RationalPoint, degree: int) -> Tuple[Dict, ...]:
    """m (x_j - c_j) for D_R basis monomials m of degree < degree, as coordinate vectors"""
    field, n = point.field, complex_.n
    factors = [
        DiffOp(field, n, {(unit(n, j), zero(n)): field.one, (zero(n), zero(n)): -point.coords[j]})
        for j in range(n)
    ]
    out = []
    for a, t in IdealizerService.dr_basis_up_to(complex_, degree - 1):
        m = DiffOp.monomial(field, n, a, t)
        for factor in factors:
            product = reduce_op(WeylService.compose(m, factor), complex_)
            if product:
                out.append(product.terms)
    logger.debug(f"Truncated D*m span at degree {degree}: {len(out)} generators")
    return tuple(out)


class DdmService:

    @staticmethod
    def to_operator(element: DdmElement) -> DiffOp:
        """Sum of coefficients times <t> in D_S"""
        return DiffOp(element.field, element.n, {bracket(element.n, t): c for t, c in element.coeffs.items()})

    @staticmethod
    def normal_form(op: DiffOp, complex_: SimplicialComplex, point: RationalPoint) -> DdmElement:
        """Representative of the class of op in D/Dm in the <t> coordinates, by repeated congruence rewriting

        op minus the result lies in D*m. The result is not canonical where the <t> are
        dependent modulo D*m (see basis_rank_check): at a point with vanishing coordinates
        a nonzero result can still lie in D*m.
        """
        field, n = point.field, complex_.n
        faces = ComplexService.face_set(complex_)
        op = reduce_op(op, complex_)
        # x^b <t> with x-part x^(b + e_T)
        pending: Dict[Tuple[Exponent, Exponent], object] = {}
        for (a, t), c in op.terms.items():
            if not is_subset(support(t), support(a)):
                raise PreconditionError(
                    f"{format_term(complex_.labels, a, t)} is not generated by the x_i d_i^[t] operators"
                )
            key = (sub(a, indicator(n, support(t))), t)
            pending[key] = pending.get(key, field.zero) + c

        out: Dict[Exponent, object] = {}
        while pending:
            # Largest (|b|, |t|) first so equal terms merge before rewriting
            key = max(pending, key=lambda k: (sum(k[0]), sum(k[1]), k))
            c = pending.pop(key)
            if not c:
                continue
            b, t = key
            if support(b) | support(t) not in faces:
                continue
            i = next((k for k, bk in enumerate(b) if bk), None)
            if i is None:
                out[t] = out.get(t, field.zero) + c
                continue
            lower = sub(b, unit(n, i))
            rewrites = []
            if point.coords[i]:
                rewrites.append(((lower, t), c * point.coords[i]))
            if t[i] >= 2:
                rewrites.append(((lower, sub(t, unit(n, i))), -c))
            elif t[i] == 1:
                rewrites.append(((b, sub(t, unit(n, i))), -c))
            for target, value in rewrites:
                pending[target] = pending.get(target, field.zero) + value
        return DdmElement(field, n, out)

    @staticmethod
    def dm_span_contains(op: DiffOp, complex_: SimplicialComplex, point: RationalPoint,
                         degree: Optional[int] = None) -> bool:
        """Membership in the truncated span of D*m"""
        op = reduce_op(op, complex_)
        if not op:
            return True
        if degree is None:
            degree = op.degree + settings.DDM_TRUNCATION_SLACK
        return in_span(dm_generators(complex_, point, degree), op.terms, point.field)

    @staticmethod
    def normal_form_verified(op: DiffOp, complex_: SimplicialComplex, point: RationalPoint) -> bool:
        """op minus its normal form lies in D*m"""
        nf = DdmService.to_operator(DdmService.normal_form(op, complex_, point))
        difference = reduce_op(op - nf, complex_)
        degree = max(op.degree, nf.degree) + settings.DDM_TRUNCATION_SLACK
        return DdmService.dm_span_contains(difference, complex_, point, degree)

    @staticmethod
    def congruence_step_check(b: Exponent, t: Exponent, i: int, complex_: SimplicialComplex,
                              point: RationalPoint) -> CheckResult:
        """One rewrite of x^b <t> at index i differs from it by an element of D*m"""
        field, n = point.field, complex_.n
        if not b[i]:
            return CheckResult(verdict=Verdict.NA, details="index not in the prefactor")

        def term(bb, tt):
            x, d = bracket(n, tt)
            return DiffOp.monomial(field, n, tuple(p + q for p, q in zip(bb, x)), d)

        lower = sub(b, unit(n, i))
        lhs = term(b, t)
        rhs = term(lower, t).scale(point.coords[i])
        if t[i] >= 2:
            rhs = rhs - term(lower, sub(t, unit(n, i)))
        elif t[i] == 1:
            rhs = rhs - term(b, sub(t, unit(n, i)))
        if DdmService.dm_span_contains(lhs - rhs, complex_, point):
            return CheckResult(verdict=Verdict.PASS)
        return CheckResult(
            verdict=Verdict.FAIL,
            details="rewrite step not congruent modulo D*m",
            witness={"b": list(b), "t": list(t), "i": i, "point": point.describe()},
        )

    @staticmethod
    def shifted_power(complex_: SimplicialComplex, point: RationalPoint, exponent: Exponent) -> PolyElement:
        """(x - c)^exponent as a polynomial"""
        ring = get_ring(complex_.labels, point.field)
        out = ring.one
        for i, e in enumerate(exponent):
            out *= (ring.gens[i] - point.coords[i]) ** e
        return out

    @staticmethod
    def find_inverse(w: DdmElement, complex_: SimplicialComplex, point: RationalPoint) -> InverseReport:
        """f in m with f w = 1, via g = (x - c)^t_l for a maximal t_l"""
        if w.is_scalar:
            raise PreconditionError("Element is a scalar; unit finding needs some <t> with t nonzero")
        field = point.field
        ts = [t for t, _ in w]
        maximal = [t for t in ts if not any(s != t and all(x >= y for x, y in zip(s, t)) for s in ts)]
        t_l = max(maximal)
        g = DdmService.shifted_power(complex_, point, t_l)
        gw = WeylService.compose(DiffOp.from_poly(g), DdmService.to_operator(w))
        reduced = DdmService.normal_form(gw, complex_, point)
        if not reduced or not reduced.is_scalar:
            logger.warning(
                f"Unit finding failed at point {point.describe()} for t_l={list(t_l)}: "
                f"(x - c)^t_l w reduces to {DdmService.describe(complex_, reduced) or 0}"
            )
            return InverseReport(
                found=False,
                witness=FailureWitness(
                    w=DdmService.describe(complex_, w),
                    point=point.describe(),
                    t_l=list(t_l),
                    reduced=DdmService.describe(complex_, reduced),
                ),
            )
        scalar = reduced.scalar()
        f = g * field.revert(scalar)
        check = DdmService.normal_form(
            WeylService.compose(DiffOp.from_poly(f), DdmService.to_operator(w)), complex_, point
        )
        verified = check == DdmElement(field, complex_.n, {zero(complex_.n): field.one}) and not f(*point.coords)
        return InverseReport(found=True, f=format_polynomial(f), scalar=to_str(field, scalar), verified=verified)

    @staticmethod
    def annihilation_check(a: Exponent, t: Exponent, complex_: SimplicialComplex,
                           point: RationalPoint) -> CheckResult:
        """(x - c)^a <t> vanishes in D/Dm when a_i > t_i for some i"""
        if all(x <= y for x, y in zip(a, t)):
            return CheckResult(verdict=Verdict.NA, details="a <= t coordinatewise")
        op = WeylService.compose(
            DiffOp.from_poly(DdmService.shifted_power(complex_, point, a)),
            DiffOp.monomial(point.field, complex_.n, *bracket(complex_.n, t)),
        )
        nf = DdmService.normal_form(op, complex_, point)
        in_dm = DdmService.dm_span_contains(op, complex_, point)
        if not nf and in_dm:
            return CheckResult(verdict=Verdict.PASS)
        return CheckResult(
            verdict=Verdict.FAIL,
            details="shifted power does not annihilate <t>",
            witness={"a": list(a), "t": list(t), "normal_form": [c.model_dump() for c in DdmService.describe(complex_, nf)],
                     "oracle_zero": in_dm},
        )

    @staticmethod
    def bracket_orders(complex_: SimplicialComplex, max_order: int) -> List[Exponent]:
        """t with supp(t) a face and |t| <= max_order"""
        faces = ComplexService.face_set(complex_)
        return [t for t in compositions_up_to(complex_.n, max_order) if support(t) in faces]

    @staticmethod
    def basis_rank_check(complex_: SimplicialComplex, point: RationalPoint, max_order: int) -> RankReport:
        """Independence of the <t>, |t| <= max_order, modulo the truncated D*m"""
        field, n = point.field, complex_.n
        ts = DdmService.bracket_orders(complex_, max_order)
        vectors = [DiffOp.monomial(field, n, *bracket(n, t)).terms for t in ts]
        truncation = max_order + settings.DDM_TRUNCATION_SLACK
        truncation = max(truncation, max((2 * sum(t) for t in ts), default=0) + settings.DDM_TRUNCATION_SLACK)
        span = list(dm_generators(complex_, point, truncation))
        base = rank(span, field)
        total = rank(span + vectors, field)
        count = len(vectors)
        if total - base == count:
            check = CheckResult(verdict=Verdict.PASS, details=f"{count} classes independent")
        else:
            j, relation = dependency(span + vectors, field, start=len(span))
            dependent = ts[j - len(span)]
            combination = {
                "+".join(map(str, ts[k - len(span)])): to_str(field, relation[k])
                for k in range(len(span), j + 1) if relation[k]
            }
            logger.warning(
                f"<{list(dependent)}> lies in the span of D*m and lower classes at point {point.describe()}"
            )
            check = CheckResult(
                verdict=Verdict.FAIL,
                details="classes dependent modulo D*m",
                witness={"point": point.describe(), "dependent": list(dependent), "relation": combination},
            )
        return RankReport(max_order=max_order, truncation=truncation, count=count, rank=total - base, check=check)

    @staticmethod
    def filtration_image_dims(complex_: SimplicialComplex, point: RationalPoint, i_max: int) -> List[int]:
        """dim of the image of the Bernstein level i in D/Dm, for i <= i_max"""
        field = point.field
        truncation = i_max + settings.DDM_TRUNCATION_SLACK
        span = list(dm_generators(complex_, point, truncation))
        base = rank(span, field)
        basis = IdealizerService.dr_basis_up_to(complex_, i_max)
        dims = []
        for i in range(i_max + 1):
            level = [DiffOp.monomial(field, complex_.n, a, t).terms for a, t in basis if sum(a) + sum(t) <= i]
            dims.append(rank(span + level, field) - base)
        return dims

    @staticmethod
    def filt_dim_check(complex_: SimplicialComplex, point: RationalPoint, i_max: int) -> FiltDimReport:
        """dim of level i applied to the class of 1 against H_1(R, i)"""
        dims = DdmService.filtration_image_dims(complex_, point, i_max)
        expected = [SRAlgebraService.iterated_hilbert(complex_, i) for i in range(i_max + 1)]
        short = next((i for i in range(i_max + 1) if dims[i] < expected[i]), None)
        if short is None:
            check = CheckResult(verdict=Verdict.PASS)
        else:
            logger.warning(f"Level {short} image has dim {dims[short]} < H_1 = {expected[short]}")
            check = CheckResult(
                verdict=Verdict.FAIL,
                details="filtration image smaller than the iterated Hilbert function",
                witness={"level": short, "dim": dims[short], "iterated_hilbert": expected[short],
                         "point": point.describe()},
            )
        return FiltDimReport(i_max=i_max, dims=dims, expected=expected, check=check)

    @staticmethod
    def describe(complex_: SimplicialComplex, element: Union[DdmElement, None]) -> List[Coordinate]:
        if element is None:
            return []
        return [
            Coordinate(
                t=list(t),
                literal=format_term(complex_.labels, *bracket(complex_.n, t)) or "1",
                coefficient=to_str(element.field, c),
            )
            for t, c in element
        ]
