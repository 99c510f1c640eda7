# test_v1/test_localization.py
import pytest

from srdmod.core.errors import DomainError, ParseError, PreconditionError
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.localization.fractions import Fraction
from srdmod.domains.localization.service import LocalizationService
from srdmod.domains.sralgebra.monomial import MonomialIdeal
from srdmod.domains.sralgebra.polynomial import parse_polynomial
from srdmod.domains.weyl.operators import DiffOp
from srdmod.domains.weyl.parser import parse_operator

W = (0, 0, 0, 1)


def test_saturate_at_x(tripp, QQ):
    """Test 0 : x^inf is generated by w and y z"""
    ctx = LocalizationService.context(tripp, "x", QQ)
    assert ctx.saturation == MonomialIdeal(4, [W, (0, 1, 1, 0)])
    assert ctx.sat_exponent == 1
    assert ctx.degree == 1
    report = LocalizationService.saturation_report(ctx)
    assert report.saturation == ["w", "y*z"]


def test_saturate_at_w(tripp, QQ):
    ctx = LocalizationService.context(tripp, "w", QQ)
    assert ctx.saturation == MonomialIdeal(4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)])


def test_saturate_rejects(tripp, QQ):
    """Test zero, non-face and non-monomial denominators"""
    with pytest.raises(DomainError):
        LocalizationService.context(tripp, "0", QQ)
    with pytest.raises(DomainError):
        LocalizationService.context(tripp, "x*w", QQ)
    with pytest.raises(DomainError):
        LocalizationService.context(tripp, "x + y", QQ)


def test_canonical_fraction_over_polynomial_ring(QQ):
    """Test cancellation of a non-monomial f"""
    plane = ComplexService.full_simplex(2)
    ctx = LocalizationService.context(plane, "x1 + x2", QQ)
    u = LocalizationService.fraction(ctx, parse_polynomial("(x1 + x2)^2", plane.labels, QQ), 3)
    assert u.numerator == ctx.ring.one
    assert u.power == 1
    parsed = LocalizationService.parse_fraction(ctx, "2/(x1 + x2)^2")
    assert parsed.power == 2
    assert LocalizationService.frac_equal(parsed, Fraction(ctx, 2 * ctx.f, 3))


def test_fraction_arithmetic(tripp, QQ):
    ctx = LocalizationService.context(tripp, "x", QQ)
    x = ctx.ring.gens[0]
    half = LocalizationService.parse_fraction(ctx, "y/x")
    total = LocalizationService.frac_add(half, half)
    assert LocalizationService.frac_equal(total, LocalizationService.parse_fraction(ctx, "2*y/x"))
    assert not LocalizationService.frac_sub(half, half)
    assert LocalizationService.frac_equal(LocalizationService.frac_mul_poly(half, x), Fraction(ctx, ctx.ring.gens[1], 0))
    # y z vanishes after inverting x
    assert not LocalizationService.parse_fraction(ctx, "y*z/x^2")
    with pytest.raises(DomainError):
        Fraction(ctx, x, -1)


def test_parse_fraction_errors(tripp, QQ):
    ctx = LocalizationService.context(tripp, "w", QQ)
    with pytest.raises(ParseError):
        LocalizationService.parse_fraction(ctx, "x/y")


def test_euler_action_on_inverse(tripp, QQ):
    """Test x d_x (1 / x) = -1 / x"""
    ctx = LocalizationService.context(tripp, "x", QQ)
    u = LocalizationService.parse_fraction(ctx, "1/x")
    image = LocalizationService.act(0, 1, u)
    assert LocalizationService.frac_equal(image, LocalizationService.parse_fraction(ctx, "-1/x"))
    assert LocalizationService.to_text(image) == "(-1)/(x)"


def test_action_on_other_variable(tripp, QQ):
    """Test y d_y (x / y) = -x / y"""
    ctx = LocalizationService.context(tripp, "y", QQ)
    image = LocalizationService.act(1, 1, LocalizationService.parse_fraction(ctx, "x/y"))
    assert LocalizationService.frac_equal(image, LocalizationService.parse_fraction(ctx, "-x/y"))


def test_divided_power_on_negative_power(tripp, QQ):
    """Test w d_w^[2] (1 / w^2) = C(-2, 2) / w^3 = 3 / w^3"""
    ctx = LocalizationService.context(tripp, "w", QQ)
    op = parse_operator("x4 d4^[2]", tripp.labels, QQ)
    image = LocalizationService.act_operator(op, LocalizationService.parse_fraction(ctx, "1/w^2"))
    assert LocalizationService.frac_equal(image, LocalizationService.parse_fraction(ctx, "3/w^3"))
    # z is killed by w
    assert not LocalizationService.act_operator(op, LocalizationService.parse_fraction(ctx, "x3/w^2"))


def test_act_operator_precondition(tripp, QQ):
    ctx = LocalizationService.context(tripp, "w", QQ)
    with pytest.raises(PreconditionError):
        LocalizationService.act_operator(DiffOp.divided_power(QQ, 4, W), LocalizationService.parse_fraction(ctx, "1/w"))


def test_saturation_of_ideal(tripp):
    assert LocalizationService.saturation_of_ideal(tripp, [W]) == MonomialIdeal(
        4, [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0)]
    )


def test_cech_tripp_small_box(tripp, QQ):
    """Test H^1 sits at -k e_w and the candidate primes of H^0 and H^1"""
    report = LocalizationService.cech_report(tripp, [W], QQ, (-2, 2))
    assert report.square_zero
    h1 = sorted(tuple(e.multidegree) for e in report.entries if e.j == 1)
    assert h1 == [(0, 0, 0, -2), (0, 0, 0, -1)]
    assert all(e.dim == 1 for e in report.entries)
    primes = {(p.j, tuple(p.prime)) for p in report.candidate_primes}
    assert (1, ("x", "y", "z", "w")) in primes
    assert {prime for j, prime in primes if j == 1} == {("x", "y", "z", "w")}
    assert {prime for j, prime in primes if j == 0} == {("x", "w"), ("y", "w"), ("z", "w")}
    assert report.heuristic


def test_cech_h0_is_saturation(tripp, QQ):
    _, entries, _ = LocalizationService.cech_cohomology(tripp, [W], QQ, (-2, 2))
    saturation = LocalizationService.saturation_of_ideal(tripp, [W])
    for j, m, _ in entries:
        if j == 0:
            assert min(m) >= 0
            assert saturation.contains(m)


def test_cech_two_generators_square_zero(tripp, QQ):
    _, _, square_zero = LocalizationService.cech_cohomology(tripp, [(1, 1, 0, 0), W], QQ, (-1, 1))
    assert square_zero


def test_cech_empty_box(tripp, QQ):
    with pytest.raises(DomainError):
        LocalizationService.cech_cohomology(tripp, [W], QQ, (1, 0))


@pytest.mark.slow
def test_cech_tripp_default_box(tripp, QQ):
    """Test H^1 is one-dimensional exactly at -k e_w for k = 1..4"""
    _, entries, square_zero = LocalizationService.cech_cohomology(tripp, [W], QQ, (-4, 4))
    assert square_zero
    h1 = sorted((m, dim) for j, m, dim in entries if j == 1)
    assert h1 == [((0, 0, 0, -k), 1) for k in range(4, 0, -1)]
