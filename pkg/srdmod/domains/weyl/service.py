# srdmod/domains/weyl/service.py
import logging
import random
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

from sympy.polys.domains.domain import Domain
from sympy.polys.rings import PolyElement

from srdmod.core.bits import Exponent, add, compositions_up_to, sub, unit, zero
from srdmod.core.errors import DomainError
from srdmod.core.fields import same_field
from srdmod.core.schemas import CheckResult, Verdict
from srdmod.domains.weyl.operators import DiffOp, format_operator
from srdmod.domains.weyl.schemas import CommutationReport, CommutatorFinding

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def rewrite_table(s: int, b: int) -> Tuple[Tuple[int, int, int], ...]:
    """d^[s] x^b = sum of c x^p d^[q], as (p, q, c) with integer c

    Built by repeated use of d^[s] x = x d^[s] + d^[s-1].
    """
    if s == 0:
        return ((b, 0, 1),)
    if b == 0:
        return ((0, s, 1),)
    out: Dict[Tuple[int, int], int] = {}
    for p, q, c in rewrite_table(s, b - 1):
        out[(p + 1, q)] = out.get((p + 1, q), 0) + c
    for p, q, c in rewrite_table(s - 1, b - 1):
        out[(p, q)] = out.get((p, q), 0) + c
    return tuple((p, q, c) for (p, q), c in sorted(out.items()) if c)


def _monomial_product(a: Exponent, s: Exponent, b: Exponent, t: Exponent) -> List[Tuple[Exponent, Exponent, int]]:
    """(x^a d^[s]) (x^b d^[t]) in normal form with integer coefficients"""
    partial: List[Tuple[Tuple[int, ...], Tuple[int, ...], int]] = [((), (), 1)]
    for i in range(len(a)):
        step = []
        for p, q, c in rewrite_table(s[i], b[i]):
            # d^[q] d^[t] = C(q + t, q) d^[q + t]
            step.append((a[i] + p, q + t[i], c * comb(q + t[i], q)))
        partial = [(xa + (p,), xt + (q,), c0 * c) for xa, xt, c0 in partial for p, q, c in step]
    return partial


class WeylService:

    @staticmethod
    def compose(left: DiffOp, right: DiffOp) -> DiffOp:
        """Normal form of left o right"""
        same_field(left.field, right.field)
        if left.n != right.n:
            raise DomainError(f"Operators on {left.n} and {right.n} variables")
        field = left.field
        out: Dict = {}
        for (a, s), c1 in left.terms.items():
            for (b, t), c2 in right.terms.items():
                c12 = c1 * c2
                for xa, xt, k in _monomial_product(a, s, b, t):
                    value = field(k)
                    if not value:
                        continue
                    key = (xa, xt)
                    out[key] = out.get(key, field.zero) + c12 * value
        return DiffOp(field, left.n, out)

    @staticmethod
    def compose_all(ops: Sequence[DiffOp]) -> DiffOp:
        out = ops[0]
        for op in ops[1:]:
            out = WeylService.compose(out, op)
        return out

    @staticmethod
    def apply(op: DiffOp, poly: PolyElement) -> PolyElement:
        """Action on a polynomial: d^[t] x^v = C(v, t) x^(v - t) in each variable"""
        ring = poly.ring
        same_field(op.field, ring.domain)
        if op.n != ring.ngens:
            raise DomainError(f"Operator on {op.n} variables applied in {ring.ngens} variables")
        field = op.field
        out: Dict = {}
        for (a, t), c in op.terms.items():
            for v, d in poly.items():
                k = 1
                for vi, ti in zip(v, t):
                    if vi < ti:
                        k = 0
                        break
                    k *= comb(vi, ti)
                if not k:
                    continue
                value = field(k)
                if not value:
                    continue
                m = add(sub(v, t), a)
                out[m] = out.get(m, field.zero) + c * d * value
        return ring.from_dict(out)

    @staticmethod
    def commutator(left: DiffOp, right: DiffOp) -> DiffOp:
        return WeylService.compose(left, right) - WeylService.compose(right, left)

    @staticmethod
    def order(op: DiffOp) -> int:
        """Largest divided-power degree; the zero operator has order -1"""
        return op.order

    @staticmethod
    def multiplication(poly: PolyElement) -> DiffOp:
        return DiffOp.from_poly(poly)

    @staticmethod
    def leibniz_identity_check(i: int, t: int, poly: PolyElement) -> CheckResult:
        """x_i d_i^[t] o f == sum over s of (d_i^[s] f) x_i d_i^[t-s]"""
        field, n = poly.ring.domain, poly.ring.ngens
        lhs = WeylService.compose(DiffOp.xdx(field, n, i, t), DiffOp.from_poly(poly))
        rhs = DiffOp.zero(field, n)
        for s in range(t + 1):
            derivative = WeylService.apply(DiffOp.divided_power(field, n, unit(n, i, s)), poly)
            rhs = rhs + WeylService.compose(DiffOp.from_poly(derivative), DiffOp.xdx(field, n, i, t - s))
        if lhs == rhs:
            return CheckResult(verdict=Verdict.PASS)
        labels = [f"x{k + 1}" for k in range(n)]
        return CheckResult(
            verdict=Verdict.FAIL,
            details="operator product rule",
            witness={"i": i, "t": t, "f": str(poly), "lhs": format_operator(lhs, labels),
                     "rhs": format_operator(rhs, labels)},
        )

    @staticmethod
    def xdx_power_check(field: Domain, t: int, u: int) -> CheckResult:
        """x d^[t] o x^u == sum over s of C(u, s) x^(u-s+1) d^[t-s], in one variable"""
        lhs = WeylService.compose(
            DiffOp.xdx(field, 1, 0, t), DiffOp.monomial(field, 1, (u,), (0,))
        )
        rhs = DiffOp(field, 1, {
            ((u - s + 1,), (t - s,)): field(comb(u, s)) for s in range(min(t, u) + 1)
        })
        if lhs == rhs:
            return CheckResult(verdict=Verdict.PASS)
        return CheckResult(
            verdict=Verdict.FAIL,
            details="x d^[t] against x^u",
            witness={"t": t, "u": u, "lhs": format_operator(lhs, ["x"]), "rhs": format_operator(rhs, ["x"])},
        )

    @staticmethod
    def composition_oracle_check(left: DiffOp, right: DiffOp, polys: Sequence[PolyElement]) -> CheckResult:
        """Composition acts as the composite of the actions"""
        product = WeylService.compose(left, right)
        labels = [f"x{k + 1}" for k in range(left.n)]
        for poly in polys:
            direct = WeylService.apply(product, poly)
            nested = WeylService.apply(left, WeylService.apply(right, poly))
            if direct != nested:
                return CheckResult(
                    verdict=Verdict.FAIL,
                    details="composition against nested action",
                    witness={"left": format_operator(left, labels), "right": format_operator(right, labels),
                             "p": str(poly), "composed": str(direct), "nested": str(nested)},
                )
        return CheckResult(verdict=Verdict.PASS)

    @staticmethod
    def commutation_report(field: Domain, n: int, max_order: int) -> CommutationReport:
        """[x_i d_i^[s], x_j d_j^[t]] and [x_i d_i^[s], x_j] over all i, j, s, t <= max_order"""
        labels = [f"x{k + 1}" for k in range(n)]
        failures, findings = [], []

        def finding(left: DiffOp, right: DiffOp, value: DiffOp) -> CommutatorFinding:
            return CommutatorFinding(
                left=format_operator(left, labels),
                right=format_operator(right, labels),
                commutator=format_operator(value, labels),
            )

        for i in range(n):
            for j in range(n):
                for s in range(max_order + 1):
                    left = DiffOp.xdx(field, n, i, s)
                    for t in range(max_order + 1):
                        right = DiffOp.xdx(field, n, j, t)
                        value = WeylService.commutator(left, right)
                        if not value:
                            continue
                        (failures if i != j else findings).append(finding(left, right, value))
                    if i != j:
                        right = DiffOp.monomial(field, n, unit(n, j), zero(n))
                        value = WeylService.commutator(left, right)
                        if value:
                            failures.append(finding(left, right, value))
        if findings:
            logger.warning(
                f"{len(findings)} same-variable pairs x_i d_i^[s], x_i d_i^[t] do not commute, "
                f"first: {findings[0].commutator}"
            )
        return CommutationReport(
            n=n,
            max_order=max_order,
            cross_variable_ok=not failures,
            cross_variable_failures=failures,
            same_variable_findings=findings,
        )

    @staticmethod
    def random_operator(rng: random.Random, field: Domain, n: int, degree: int, terms: int = 3) -> DiffOp:
        """Operator with a few random terms of Bernstein degree <= degree"""
        pool = [(a, t) for a in compositions_up_to(n, degree) for t in compositions_up_to(n, degree - sum(a))]
        out: Dict = {}
        for _ in range(terms):
            key = rng.choice(pool)
            out[key] = out.get(key, field.zero) + field(rng.randint(-3, 3))
        return DiffOp(field, n, out)

    @staticmethod
    def random_polynomial(rng: random.Random, ring, degree: int, terms: int = 3) -> PolyElement:
        """Nonconstant polynomial with a few random terms of degree <= degree"""
        pool = compositions_up_to(ring.ngens, degree)
        while True:
            poly = ring.from_dict({rng.choice(pool): ring.domain(rng.randint(-3, 3)) for _ in range(terms)})
            if any(sum(m) for m in poly.keys()):
                return poly
