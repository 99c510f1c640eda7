# srdmod/domains/verification/service.py
import hashlib
import json
import logging
import random
from typing import Any, Dict, List, Optional, Tuple

from sympy.polys.domains.domain import Domain

from srdmod import __version__
from srdmod.core.bits import popcount, support, unit, vertices_of
from srdmod.core.fields import characteristic
from srdmod.core.schemas import CheckResult, Verdict
from srdmod.domains.complex.schemas import SimplicialComplex, TSpaceVerdict
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.ddm.schemas import RationalPoint
from srdmod.domains.ddm.service import DdmService
from srdmod.domains.holonomy.service import HolonomyService
from srdmod.domains.idealizer.operators import DROperator, traves_member
from srdmod.domains.idealizer.service import IdealizerService
from srdmod.domains.localization.cech import box_points
from srdmod.domains.localization.service import LocalizationService
from srdmod.domains.sralgebra.monomial import MonomialIdeal
from srdmod.domains.sralgebra.polynomial import format_polynomial, get_ring
from srdmod.domains.sralgebra.service import SRAlgebraService
from srdmod.domains.verification.schemas import VerifyRecord, VerifyReport, VerifySummary
from srdmod.domains.weyl.operators import DiffOp
from srdmod.domains.weyl.service import WeylService

logger = logging.getLogger(__name__)

# Multidegrees beyond which the Cech check is skipped in a suite run
MAX_BOX_POINTS = 20000

Finding = Tuple[str, str, Dict[str, Any], CheckResult]


def instance_hash(instance: Dict[str, Any]) -> str:
    return hashlib.sha256(json.dumps(instance, sort_keys=True).encode()).hexdigest()[:12]


def default_point(complex_: SimplicialComplex, field: Domain) -> Optional[RationalPoint]:
    """All ones on the first facet of largest size"""
    if complex_.is_void:
        return None
    top = max(popcount(h) for h in complex_.facets)
    facet = next(h for h in complex_.facets if popcount(h) == top)
    return RationalPoint(field, [field.one if (facet >> v) & 1 else field.zero for v in range(complex_.n)], complex_)


def random_dr_operator(rng: random.Random, complex_: SimplicialComplex, field: Domain, degree: int,
                       terms: int = 3) -> DiffOp:
    """Random combination of x^a d^[t] with supp(t) inside supp(a)"""
    pool = IdealizerService.xdelx_expected(complex_, degree)
    out: Dict = {}
    for _ in range(terms):
        key = rng.choice(pool)
        out[key] = out.get(key, field.zero) + field(rng.randint(-3, 3))
    return DiffOp(field, complex_.n, out)


class VerificationService:

    @staticmethod
    def complex_checks(complex_: SimplicialComplex) -> List[Finding]:
        base = {"complex": ComplexService.dump(complex_)}
        out = []
        fast = ComplexService.is_t_space(complex_)
        slow = ComplexService.is_t_space_bruteforce(complex_)
        result = CheckResult(verdict=Verdict.PASS, details=fast.value) if fast == slow else CheckResult(
            verdict=Verdict.FAIL, details="vertex criterion and full definition disagree",
            witness={"criterion": fast.value, "definition": slow.value},
        )
        out.append(("complex.t_space", "vertex separation criterion matches the full separation definition",
                    base, result))

        if fast == TSpaceVerdict.TRUE:
            bad = next(
                (face for face in ComplexService.faces(complex_)
                 if ComplexService.is_t_space(ComplexService.link(complex_, face)) == TSpaceVerdict.FALSE),
                None,
            )
            result = CheckResult(verdict=Verdict.PASS) if bad is None else CheckResult(
                verdict=Verdict.FAIL, details="link of a T-space is not a T-space",
                witness={"face": ComplexService.names(complex_, bad)},
            )
        else:
            result = CheckResult(verdict=Verdict.NA, details=f"T-space verdict is {fast.value}")
        out.append(("complex.link_closure", "links of T-space faces are T-spaces", base, result))

        if ComplexService.is_graph(complex_):
            degrees = ComplexService.vertex_degrees(complex_)
            if fast == TSpaceVerdict.NOT_APPLICABLE:
                result = CheckResult(verdict=Verdict.NA, details="full simplex")
            elif (fast == TSpaceVerdict.TRUE) == (1 not in degrees):
                result = CheckResult(verdict=Verdict.PASS)
            else:
                result = CheckResult(verdict=Verdict.FAIL, details="graph law violated",
                                     witness={"degrees": degrees, "t_space": fast.value})
            out.append(("complex.graph_law", "a graph is a T-space iff no vertex has degree one", base, result))
        return out

    @staticmethod
    def sralgebra_checks(complex_: SimplicialComplex, max_degree: int) -> List[Finding]:
        base = {"complex": ComplexService.dump(complex_), "max_degree": max_degree}
        out = []
        bad = next(
            (j for j in range(max_degree + 1)
             if SRAlgebraService.hilbert(complex_, j) != SRAlgebraService.count_monomials_bruteforce(complex_, j)),
            None,
        )
        result = CheckResult(verdict=Verdict.PASS) if bad is None else CheckResult(
            verdict=Verdict.FAIL, details="closed form differs from the monomial count",
            witness={"j": bad, "closed_form": SRAlgebraService.hilbert(complex_, bad),
                     "count": SRAlgebraService.count_monomials_bruteforce(complex_, bad)},
        )
        out.append(("sralgebra.hilbert", "Hilbert function equals the face-supported monomial count", base, result))

        primes = [SRAlgebraService.prime_ideal(complex_.n, p) for p in SRAlgebraService.minimal_primes(complex_)]
        intersection = MonomialIdeal.intersect_all(complex_.n, primes)
        face_ideal = SRAlgebraService.face_ideal(complex_)
        result = CheckResult(verdict=Verdict.PASS) if intersection == face_ideal else CheckResult(
            verdict=Verdict.FAIL, details="intersection of minimal primes differs from the face ideal",
            witness={"intersection": [list(g) for g in intersection.generators],
                     "face_ideal": [list(g) for g in face_ideal.generators]},
        )
        out.append(("sralgebra.minimal_primes", "face ideal is the intersection of the facet complement primes",
                    base, result))
        return out

    @staticmethod
    def weyl_checks(field: Domain, n: int, rng: random.Random, samples: int, degree: int) -> List[Finding]:
        n = max(1, min(n, 3))
        degree = min(degree, 4)
        base = {"n": n, "characteristic": characteristic(field), "degree": degree}
        ring = get_ring(tuple(f"x{i + 1}" for i in range(n)), field)
        out = []
        result = CheckResult(verdict=Verdict.PASS)
        for k in range(samples):
            left = WeylService.random_operator(rng, field, n, degree)
            right = WeylService.random_operator(rng, field, n, degree)
            polys = [WeylService.random_polynomial(rng, ring, 6) for _ in range(3)]
            result = WeylService.composition_oracle_check(left, right, polys)
            if not result.passed:
                break
            third = WeylService.random_operator(rng, field, n, degree)
            if WeylService.compose(WeylService.compose(left, right), third) != \
                    WeylService.compose(left, WeylService.compose(right, third)):
                result = CheckResult(verdict=Verdict.FAIL, details="composition not associative",
                                     witness={"sample": k})
                break
        out.append(("weyl.composition", "composition acts as nested action and is associative",
                    {**base, "samples": samples}, result))

        result = next(
            (r for t in range(6) for u in range(6) for r in [WeylService.xdx_power_check(field, t, u)] if not r.passed),
            CheckResult(verdict=Verdict.PASS),
        )
        out.append(("weyl.xdx_power", "x d^[t] x^u expands with binomial coefficients", base, result))

        for _ in range(min(samples, 5)):
            i = rng.randrange(n)
            t = rng.randint(0, 4)
            f = ring.from_dict({rng.choice(monomials): field(rng.randint(-3, 3)) for _ in range(3)})
            result = WeylService.leibniz_identity_check(i, t, f)
            if not result.passed:
                break
        out.append(("weyl.product_rule", "x d^[t] f equals the sum of (d^[s] f) x d^[t-s]", base, result))

        report = WeylService.commutation_report(field, n, 3)
        result = CheckResult(verdict=Verdict.PASS, details=f"{len(report.same_variable_findings)} same-variable findings") \
            if report.cross_variable_ok else CheckResult(
                verdict=Verdict.FAIL, details="cross-variable commutator nonzero",
                witness=report.cross_variable_failures[0].model_dump())
        out.append(("weyl.commutation", "x_i d_i^[s] commutes with x_j d_j^[t] and x_j for j != i", base, result))
        return out

    @staticmethod
    def idealizer_checks(complex_: SimplicialComplex, field: Domain, max_degree: int) -> List[Finding]:
        base = {"complex": ComplexService.dump(complex_), "max_degree": max_degree}
        out = [("idealizer.xdelx", "on a T-space the operator basis is x^a d^[t] with supp(t) inside supp(a)",
                base, IdealizerService.verify_xdelx(complex_, max_degree))]
        degree = min(max_degree, 4)
        disagreements = IdealizerService.traves_disagreements(complex_, degree, field)
        p = characteristic(field)
        if not disagreements:
            result = CheckResult(verdict=Verdict.PASS)
        elif p:
            result = CheckResult(verdict=Verdict.NA, details=f"{len(disagreements)} disagreements in characteristic {p}",
                                 witness=disagreements[0].model_dump())
        else:
            result = CheckResult(verdict=Verdict.FAIL, details="membership criterion differs from the action oracle",
                                 witness=disagreements[0].model_dump())
        out.append(("idealizer.traves", "membership criterion matches the bounded action oracle",
                    {**base, "max_degree": degree, "characteristic": p}, result))

        basis = IdealizerService.dr_basis_up_to(complex_, min(max_degree, 3))
        bad = None
        for u in basis:
            left = DROperator(DiffOp.monomial(field, complex_.n, *u), complex_)
            for v in basis:
                product = IdealizerService.compose_dr(left, DROperator(DiffOp.monomial(field, complex_.n, *v), complex_))
                bad = next((key for key in product.op.terms if not traves_member(*key, complex_)), None)
                if bad is not None:
                    break
            if bad is not None:
                break
        result = CheckResult(verdict=Verdict.PASS) if bad is None else CheckResult(
            verdict=Verdict.FAIL, details="composition leaves the idealizer",
            witness={"a": list(bad[0]), "t": list(bad[1])},
        )
        out.append(("idealizer.closure", "compositions of idealizer monomials stay in the idealizer",
                    {**base, "max_degree": min(max_degree, 3)}, result))
        return out

    @staticmethod
    def ddm_checks(complex_: SimplicialComplex, field: Domain, rng: random.Random, samples: int,
                   max_degree: int) -> List[Finding]:
        point = default_point(complex_, field)
        if point is None:
            return []
        base = {"complex": ComplexService.dump(complex_), "point": point.describe()}
        degree = min(max_degree, 3)
        out = []

        result = CheckResult(verdict=Verdict.PASS)
        for _ in range(min(samples, 10)):
            op = random_dr_operator(rng, complex_, field, degree)
            if not DdmService.normal_form_verified(op, complex_, point):
                result = CheckResult(verdict=Verdict.FAIL, details="normal form not congruent modulo D*m",
                                     witness={"operator": op.format(complex_.labels)})
                break
        out.append(("ddm.normal_form", "congruence rewriting agrees with the truncated D*m span",
                    {**base, "degree": degree}, result))

        result = CheckResult(verdict=Verdict.PASS)
        for _ in range(min(samples, 5)):
            i = rng.randrange(complex_.n)
            b = tuple(max(rng.randint(0, 1), 1 if k == i else 0) for k in range(complex_.n))
            t = tuple(rng.randint(0, 2) for _ in range(complex_.n))
            result = DdmService.congruence_step_check(b, t, i, complex_, point)
            if result.verdict == Verdict.FAIL:
                break
        out.append(("ddm.congruence_step", "each rewrite step differs by an element of D*m", base, result))

        found = failed = 0
        witness = None
        result = None
        for _ in range(samples):
            w = DdmService.normal_form(random_dr_operator(rng, complex_, field, degree), complex_, point)
            if not w or w.is_scalar:
                continue
            report = DdmService.find_inverse(w, complex_, point)
            if report.found and not report.verified:
                result = CheckResult(verdict=Verdict.FAIL, details="returned inverse does not verify",
                                     witness={"w": [c.model_dump() for c in DdmService.describe(complex_, w)],
                                              "f": report.f})
                break
            if report.found:
                found += 1
            else:
                failed += 1
                witness = witness or report.witness.model_dump()
        if result is None:
            result = CheckResult(verdict=Verdict.PASS, details=f"{found} inverses verified") if not failed else \
                CheckResult(verdict=Verdict.FAIL, details=f"unit finding failed on {failed} of {found + failed}",
                            witness=witness)
        out.append(("ddm.unit_finding", "(x - c)^t_l w reduces to a nonzero scalar", base, result))

        result = CheckResult(verdict=Verdict.PASS)
        for _ in range(min(samples, 5)):
            t = tuple(rng.randint(0, 1) for _ in range(complex_.n))
            if support(t) not in ComplexService.face_set(complex_):
                continue
            i = rng.randrange(complex_.n)
            a = tuple(ti + 1 if k == i else 0 for k, ti in enumerate(t))
            result = DdmService.annihilation_check(a, t, complex_, point)
            if result.verdict == Verdict.FAIL:
                break
        out.append(("ddm.annihilation", "(x - c)^a <t> vanishes when some a_i > t_i", base, result))

        out.append(("ddm.basis_rank", "the classes of <t> are independent in D/Dm", {**base, "max_order": 2},
                    DdmService.basis_rank_check(complex_, point, 2).check))
        out.append(("ddm.filt_dim", "the level i image of 1 has dimension at least H_1(R, i)", {**base, "i_max": 3},
                    DdmService.filt_dim_check(complex_, point, 3).check))
        return out

    @staticmethod
    def holonomy_checks(complex_: SimplicialComplex, field: Domain, max_degree: int) -> List[Finding]:
        base = {"complex": ComplexService.dump(complex_)}
        r = SRAlgebraService.krull_dim(complex_)
        i_max = max(max_degree, r + 2)
        out = [
            ("holonomy.r_growth", "leading coefficient of H_1 is at least 1/r!", {**base, "i_max": i_max},
             HolonomyService.r_filtration_report(complex_, i_max).check),
            ("holonomy.filtration_law", "level i operators map G_j into G_(i+j)", {**base, "limit": min(max_degree, 5)},
             HolonomyService.r_filtration_law_check(complex_, min(max_degree, 5), field)),
        ]
        point = default_point(complex_, field)
        if point is not None:
            v = vertices_of(support(point.coords))[0]
            ctx = LocalizationService.saturate(complex_, get_ring(complex_.labels, field).gens[v])
            params = {**base, "f": complex_.labels[v], "i_max": 2, "t_max": 2}
            out.append(("holonomy.rf_filtration", "generators of level t + 1 map G'_j into G'_(t+1+j)", params,
                        HolonomyService.rf_filtration_check(ctx, 2, 2)))
            out.append(("holonomy.rf_growth", "dim G'_i grows at most like C (d + 1)^r i^r", params,
                        HolonomyService.rf_growth_report(ctx, 4).check))
        return out

    @staticmethod
    def divisibility_checks(field: Domain, rng: random.Random, samples: int) -> List[Finding]:
        ring = get_ring(("x1", "x2", "x3"), field)
        result = CheckResult(verdict=Verdict.PASS)
        for _ in range(samples):
            f = WeylService.random_polynomial(rng, ring, 3)
            j = rng.randint(0, 3)
            s = rng.randint(0, j)
            report = HolonomyService.divided_derivative_divisibility(f, j, s, rng.randrange(3))
            if report.check.verdict == Verdict.FAIL:
                result = report.check.model_copy(update={"witness": {**(report.check.witness or {}),
                                                                     "f": format_polynomial(f), "j": j, "s": s}})
                break
        return [("holonomy.divisibility", "f^(j-s) divides d^[s](f^j)",
                 {"characteristic": characteristic(field), "samples": samples}, result)]

    @staticmethod
    def cech_checks(complex_: SimplicialComplex, field: Domain, box: Tuple[int, int]) -> List[Finding]:
        point = default_point(complex_, field)
        if point is None:
            return []
        v = vertices_of(support(point.coords))[0]
        generator = unit(complex_.n, v)
        base = {"complex": ComplexService.dump(complex_), "ideal": [list(generator)], "box": list(box)}
        lo, hi = box
        if (hi - lo + 1) ** complex_.n > MAX_BOX_POINTS:
            skipped = CheckResult(verdict=Verdict.NA, details="box too large for a suite run")
            return [("localization.cech_square_zero", "Cech differentials compose to zero", base, skipped),
                    ("localization.cech_h0", "H^0 equals the saturation degreewise", base, skipped)]
        _, entries, square_zero = LocalizationService.cech_cohomology(complex_, [generator], field, box)
        out = [("localization.cech_square_zero", "Cech differentials compose to zero", base,
                CheckResult(verdict=Verdict.PASS if square_zero else Verdict.FAIL,
                            witness=None if square_zero else {"box": list(box)}))]
        saturation = LocalizationService.saturation_of_ideal(complex_, [generator])
        h0 = {m for j, m, _ in entries if j == 0}
        faces = ComplexService.face_set(complex_)
        expected = {
            m for m in box_points(complex_.n, lo, hi)
            if min(m) >= 0 and support(m) in faces and saturation.contains(m)
        }
        result = CheckResult(verdict=Verdict.PASS) if h0 == expected else CheckResult(
            verdict=Verdict.FAIL, details="H^0 differs from the saturation",
            witness={"multidegree": list(sorted(h0 ^ expected)[0])},
        )
        out.append(("localization.cech_h0", "H^0 equals the saturation degreewise", base, result))
        return out

    @staticmethod
    def run_suite(complex_: SimplicialComplex, field: Domain, max_degree: int, seed: int, samples: int,
                  box: Tuple[int, int]) -> VerifyReport:
        """All checks on one complex; deterministic given the seed"""
        rng = random.Random(seed)
        findings: List[Finding] = []
        findings += VerificationService.complex_checks(complex_)
        findings += VerificationService.sralgebra_checks(complex_, max_degree)
        findings += VerificationService.weyl_checks(field, complex_.n, rng, samples, max_degree)
        findings += VerificationService.idealizer_checks(complex_, field, max_degree)
        findings += VerificationService.ddm_checks(complex_, field, rng, samples, max_degree)
        findings += VerificationService.holonomy_checks(complex_, field, max_degree)
        findings += VerificationService.divisibility_checks(field, rng, samples)
        findings += VerificationService.cech_checks(complex_, field, box)

        records = []
        summary = VerifySummary()
        for check, claim, instance, result in findings:
            records.append(VerifyRecord(
                check=check, claim=claim, instance=instance, instance_hash=instance_hash(instance),
                verdict=result.verdict, details=result.details, witness=result.witness,
            ))
            setattr(summary, result.verdict.value, getattr(summary, result.verdict.value) + 1)
            if result.verdict == Verdict.FAIL:
                logger.warning(f"{check} FAIL: {result.details}")
        records.sort(key=lambda rec: (rec.check, rec.instance_hash))
        return VerifyReport(
            version=__version__,
            seed=seed,
            characteristic=characteristic(field),
            max_degree=max_degree,
            summary=summary,
            records=records,
        )
