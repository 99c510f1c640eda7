# test_v1/test_weyl.py
import random

import pytest
import hypothesis.strategies as st
from hypothesis import given, settings as hsettings

from srdmod.core.errors import DomainError, FieldError, ParseError
from srdmod.core.fields import get_field
from srdmod.domains.sralgebra.polynomial import get_ring, parse_polynomial
from srdmod.domains.weyl.operators import DiffOp
from srdmod.domains.weyl.parser import parse_operator
from srdmod.domains.weyl.service import WeylService, rewrite_table

LABELS = ("x1", "x2", "x3")


def test_rewrite_table():
    """Test d^[1] x^2 = x^2 d^[1] + 2 x"""
    assert rewrite_table(1, 2) == ((1, 0, 2), (2, 1, 1))
    assert rewrite_table(0, 3) == ((3, 0, 1),)


def test_divided_power_action(QQ):
    """Test d^[t] x^v = C(v, t) x^(v - t)"""
    ring = get_ring(("x",), QQ)
    x = ring.gens[0]
    assert WeylService.apply(DiffOp.divided_power(QQ, 1, (2,)), x ** 5) == 10 * x ** 3
    assert WeylService.apply(DiffOp.divided_power(QQ, 1, (3,)), x ** 2) == 0


def test_divided_power_in_char_2(GF2):
    """Test d^[2] x^2 = 1 where d^2 x^2 = 2 vanishes"""
    ring = get_ring(("x",), GF2)
    x = ring.gens[0]
    assert WeylService.apply(DiffOp.divided_power(GF2, 1, (2,)), x ** 2) == ring.one
    square = WeylService.compose(DiffOp.divided_power(GF2, 1, (1,)), DiffOp.divided_power(GF2, 1, (1,)))
    assert not square


def test_compose_known_product(QQ):
    """Test d x = x d + 1"""
    d = DiffOp.divided_power(QQ, 1, (1,))
    x = DiffOp.monomial(QQ, 1, (1,), (0,))
    assert WeylService.commutator(d, x) == DiffOp.one(QQ, 1)


def test_parse_operator(QQ):
    """Test operator literals with divided powers"""
    op = parse_operator("x1^2 d1^[3] + 5 x2 d2^[1]", LABELS, QQ)
    assert op.coefficient((2, 0, 0), (3, 0, 0)) == QQ(1)
    assert op.coefficient((0, 1, 0), (0, 1, 0)) == QQ(5)
    # d^[1] d^[1] = 2 d^[2]
    twice = parse_operator("d1 d1", LABELS, QQ)
    assert twice == DiffOp.divided_power(QQ, 3, (2, 0, 0)).scale(2)
    with pytest.raises(ParseError):
        parse_operator("x9 d1", LABELS, QQ)


def test_format_operator(QQ):
    op = parse_operator("x1 d1^[1] - 1/2 x2", LABELS, QQ)
    assert op.format(LABELS) == "-1/2 x2 + x1 dx1^[1]"
    assert DiffOp.zero(QQ, 3).format(LABELS) == "0"


def test_order_and_degree(QQ):
    op = parse_operator("x1^2 d1^[3] + x2", LABELS, QQ)
    assert WeylService.order(op) == 3
    assert op.degree == 5
    assert WeylService.order(DiffOp.zero(QQ, 3)) == -1


def test_mismatched_operands(QQ, GF3):
    with pytest.raises(FieldError):
        WeylService.compose(DiffOp.one(QQ, 1), DiffOp.one(GF3, 1))
    with pytest.raises(DomainError):
        WeylService.compose(DiffOp.one(QQ, 1), DiffOp.one(QQ, 2))


@pytest.mark.parametrize("p", [0, 2, 3])
def test_composition_matches_nested_action(p):
    """Test composition against nested action on polynomials of degree <= 6, and associativity"""
    field = get_field(p)
    rng = random.Random(42)
    for _ in range(200):
        n = rng.randint(1, 3)
        ring = get_ring(LABELS[:n], field)
        left, right, third = (WeylService.random_operator(rng, field, n, 4) for _ in range(3))
        polys = [WeylService.random_polynomial(rng, ring, 6, terms=4) for _ in range(2)]
        assert WeylService.composition_oracle_check(left, right, polys).passed
        assert WeylService.compose(WeylService.compose(left, right), third) == \
            WeylService.compose(left, WeylService.compose(right, third))


@pytest.mark.parametrize("p", [0, 2, 3])
def test_xdx_power_identity(p):
    """Test x d^[t] x^u expansion for t, u <= 5"""
    field = get_field(p)
    for t in range(6):
        for u in range(6):
            assert WeylService.xdx_power_check(field, t, u).passed


@hsettings(max_examples=30, deadline=None)
@given(st.data())
def test_product_rule(data):
    """Test x_i d_i^[t] f = sum of (d_i^[s] f) x_i d_i^[t-s]"""
    field = get_field(data.draw(st.sampled_from([0, 2, 3])))
    i = data.draw(st.integers(min_value=0, max_value=1))
    t = data.draw(st.integers(min_value=0, max_value=4))
    a = data.draw(st.integers(min_value=0, max_value=4))
    b = data.draw(st.integers(min_value=0, max_value=4))
    f = parse_polynomial(f"x1^{a}*x2^{b} + x1 - 2", ("x1", "x2"), field)
    assert WeylService.leibniz_identity_check(i, t, f).passed


def test_commutation(QQ):
    """Test cross-variable commutation and the recorded same-variable commutators"""
    report = WeylService.commutation_report(QQ, 2, 3)
    assert report.cross_variable_ok
    assert report.cross_variable_failures == []
    assert report.same_variable_findings
    x_dx = DiffOp.xdx(QQ, 1, 0, 1)
    x_d2x = DiffOp.xdx(QQ, 1, 0, 2)
    assert WeylService.commutator(x_dx, x_d2x) == DiffOp.xdx(QQ, 1, 0, 2).scale(-1)


@pytest.mark.parametrize("p", [0, 2, 3])
def test_random_polynomial(p):
    """Test sampled polynomials are nonconstant with degree <= 6"""
    field = get_field(p)
    ring = get_ring(LABELS, field)
    rng = random.Random(7)
    degrees = set()
    for _ in range(50):
        poly = WeylService.random_polynomial(rng, ring, 6)
        top = max(sum(m) for m in poly.keys())
        assert 1 <= top <= 6
        degrees.add(top)
    assert len(degrees) > 1
