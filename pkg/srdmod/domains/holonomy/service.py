# srdmod/domains/holonomy/service.py
import logging
from typing import List, Optional, Sequence

from sympy import Rational, factorial
from sympy.polys.domains.domain import Domain
from sympy.polys.rings import PolyElement

from srdmod.core.bits import compositions, unit
from srdmod.core.errors import DomainError, PreconditionError
from srdmod.core.schemas import CheckResult, Verdict
from srdmod.domains.complex.schemas import SimplicialComplex, TSpaceVerdict
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.holonomy.schemas import BernsteinLevel, DivisibilityReport, GrowthReport
from srdmod.domains.idealizer.service import IdealizerService
from srdmod.domains.localization.fractions import Fraction, LocalizedContext
from srdmod.domains.localization.service import LocalizationService
from srdmod.domains.sralgebra.polynomial import format_polynomial, get_ring
from srdmod.domains.sralgebra.service import SRAlgebraService
from srdmod.domains.weyl.operators import DiffOp, format_term
from srdmod.domains.weyl.service import WeylService

logger = logging.getLogger(__name__)


def poly_degree(poly: PolyElement) -> int:
    return max((sum(m) for m in poly.keys()), default=-1)


def growth(dims: Sequence[int], r: int, check: Optional[CheckResult] = None) -> GrowthReport:
    """Smallest C with dims[i] <= C i^r for i >= 1, and the leading coefficient

    The leading coefficient is the r-th finite difference at i_max over r!. It is exact
    when the r-th differences are constant past the first, which `leading_stable` records;
    without a given check an unstable tail is a FAIL.
    """
    C = max((Rational(dims[i], i ** r) for i in range(1, len(dims))), default=Rational(dims[0]) if dims else 0)
    values = list(dims)
    for _ in range(r):
        values = [b - a for a, b in zip(values, values[1:])]
    leading = Rational(values[-1], factorial(r)) if values else Rational(0)
    stable = len(set(values[1:])) <= 1
    if check is None:
        floor = Rational(1, factorial(r))
        if not stable:
            check = CheckResult(
                verdict=Verdict.FAIL,
                details="r-th finite differences are not constant",
                witness={"r": r, "differences": values, "dims": list(dims)},
            )
        elif leading >= floor:
            check = CheckResult(verdict=Verdict.PASS, details=f"leading {leading} >= 1/{r}!")
        else:
            check = CheckResult(
                verdict=Verdict.FAIL,
                details="leading coefficient below 1/r!",
                witness={"leading": str(leading), "r": r, "dims": list(dims)},
            )
    return GrowthReport(
        dims=list(dims), r=r, C=str(C), leading=str(leading), leading_stable=stable,
        length_bound=str(C * factorial(r)), check=check,
    )


class HolonomyService:

    @staticmethod
    def bernstein_dim(complex_: SimplicialComplex, i: int) -> int:
        """dim of the Bernstein level i of D_R"""
        if i < 0:
            raise DomainError(f"Level must be non-negative, got {i}")
        return len(IdealizerService.dr_basis_up_to(complex_, i))

    @staticmethod
    def bernstein_levels(complex_: SimplicialComplex, i_max: int) -> List[BernsteinLevel]:
        basis = IdealizerService.dr_basis_up_to(complex_, i_max)
        return [
            BernsteinLevel(i=i, dim=sum(1 for a, t in basis if sum(a) + sum(t) <= i)) for i in range(i_max + 1)
        ]

    @staticmethod
    def r_filtration_report(complex_: SimplicialComplex, i_max: int) -> GrowthReport:
        """Growth of G_i = R_0 + ... + R_i, dims H_1(R, i)"""
        r = SRAlgebraService.krull_dim(complex_)
        if i_max < r + 2:
            raise PreconditionError(f"Need i_max >= r + 2 = {r + 2}, got {i_max}")
        dims = [SRAlgebraService.iterated_hilbert(complex_, i) for i in range(i_max + 1)]
        check = None
        if ComplexService.is_t_space(complex_) == TSpaceVerdict.FALSE:
            check = CheckResult(verdict=Verdict.NA, details="not a T-space")
        return growth(dims, r, check)

    @staticmethod
    def r_filtration_law_check(complex_: SimplicialComplex, limit: int, field: Domain) -> CheckResult:
        """F_i applied to G_j stays in G_(i+j) for i + j <= limit"""
        ring = get_ring(complex_.labels, field)
        # Sum of all face-supported monomials of degree j
        layers = [
            ring.from_dict({m: field.one for m in compositions(complex_.n, j) if SRAlgebraService.is_face_exponent(complex_, m)})
            for j in range(limit + 1)
        ]
        for a, t in IdealizerService.dr_basis_up_to(complex_, limit):
            i = sum(a) + sum(t)
            op = DiffOp.monomial(field, complex_.n, a, t)
            for j in range(limit - i + 1):
                image = SRAlgebraService.reduce(complex_, WeylService.apply(op, layers[j]))
                if poly_degree(image) > i + j:
                    return CheckResult(
                        verdict=Verdict.FAIL,
                        details="operator raises the degree beyond its level",
                        witness={"operator": format_term(complex_.labels, a, t), "i": i, "j": j,
                                 "image": format_polynomial(image)},
                    )
        return CheckResult(verdict=Verdict.PASS)

    @staticmethod
    def rf_member(u: Fraction, i: int) -> bool:
        """u in G'_i: re-expanded as g / f^i with deg g <= i (d + 1)"""
        ctx = u.ctx
        if u.power > i:
            return False
        g = LocalizationService.reduce(ctx, u.numerator * ctx.f ** (i - u.power))
        return poly_degree(g) <= i * (ctx.degree + 1)

    @staticmethod
    def rf_exhaustion_index(u: Fraction) -> int:
        """An index i with u in G'_i"""
        ctx = u.ctx
        w = u.power
        return w + max(0, poly_degree(u.numerator) - w * (ctx.degree + 1))

    @staticmethod
    def rf_spanning(ctx: LocalizedContext, j: int) -> List[Fraction]:
        """u / f^j for monomials u of R / J with deg u <= j (d + 1)"""
        return [
            LocalizationService.fraction(ctx, u, j)
            for u in LocalizationService.polynomials_up_to(ctx, j * (ctx.degree + 1))
        ]

    @staticmethod
    def rf_filtration_check(ctx: LocalizedContext, i_max: int, t_max: int) -> CheckResult:
        """x_l d_l^[t] (level t + 1) maps G'_j into G'_(t+1+j)"""
        n = ctx.complex.n
        for j in range(i_max + 1):
            for u in HolonomyService.rf_spanning(ctx, j):
                for t in range(t_max + 1):
                    for l in range(n):
                        image = LocalizationService.act(l, t, u)
                        if not HolonomyService.rf_member(image, t + 1 + j):
                            logger.warning(f"x{l + 1} d^[{t}] leaves the filtration at level {j}")
                            return CheckResult(
                                verdict=Verdict.FAIL,
                                details="action leaves the filtration",
                                witness={"j": j, "t": t, "variable": ctx.complex.labels[l],
                                         "fraction": LocalizationService.to_text(u),
                                         "image": LocalizationService.to_text(image)},
                            )
        return CheckResult(verdict=Verdict.PASS, details=f"levels <= {i_max}, t <= {t_max}")

    @staticmethod
    def rf_growth_report(ctx: LocalizedContext, i_max: int) -> GrowthReport:
        """dim G'_i against C_R (d + 1)^r i^r with C_R fitted on R up to i_max (d + 1)"""
        d1 = ctx.degree + 1
        r = SRAlgebraService.krull_dim(ctx.complex)
        dims = [len(LocalizationService.polynomials_up_to(ctx, i * d1)) for i in range(i_max + 1)]
        base = growth([SRAlgebraService.iterated_hilbert(ctx.complex, i) for i in range(i_max * d1 + 1)], r)
        bound = Rational(base.C) * d1 ** r
        over = next((i for i in range(1, i_max + 1) if dims[i] > bound * i ** r), None)
        if over is None:
            check = CheckResult(verdict=Verdict.PASS, details=f"dims <= {bound} i^{r}")
        else:
            check = CheckResult(
                verdict=Verdict.FAIL,
                details="localized filtration grows faster than the bound",
                witness={"i": over, "dim": dims[over], "bound": str(bound * over ** r)},
            )
        return growth(dims, r, check)

    @staticmethod
    def divided_derivative_divisibility(f: PolyElement, j: int, s: int, variable: int = 0) -> DivisibilityReport:
        """f^(j-s) divides d^[s](f^j); quotient degree at most s (deg f - 1)"""
        if not 0 <= s <= j:
            raise DomainError(f"Need 0 <= s <= j, got s={s}, j={j}")
        ring = f.ring
        field, n = ring.domain, ring.ngens
        d = poly_degree(f)
        bound = max(s * (d - 1), 0)
        derivative = WeylService.apply(DiffOp.divided_power(field, n, unit(n, variable, s)), f ** j)
        quotient, remainder = derivative.div(f ** (j - s))
        base = dict(f=format_polynomial(f), j=j, s=s, variable=str(ring.symbols[variable]), bound=bound)
        if remainder:
            return DivisibilityReport(
                **base,
                check=CheckResult(
                    verdict=Verdict.FAIL,
                    details="f^(j-s) does not divide the divided derivative",
                    witness={"remainder": format_polynomial(remainder)},
                ),
            )
        degree = poly_degree(quotient)
        if degree > bound:
            check = CheckResult(
                verdict=Verdict.FAIL,
                details="quotient degree above s (deg f - 1)",
                witness={"quotient": format_polynomial(quotient), "degree": degree},
            )
        else:
            check = CheckResult(verdict=Verdict.PASS)
        return DivisibilityReport(**base, quotient=format_polynomial(quotient), degree=degree, check=check)
