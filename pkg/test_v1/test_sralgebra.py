# test_v1/test_sralgebra.py
import random

import pytest

from srdmod.core.bits import indicator
from srdmod.core.errors import DomainError, ParseError
from srdmod.core.fields import get_field
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.sralgebra.monomial import MonomialIdeal
from srdmod.domains.sralgebra.polynomial import (
    format_monomial, format_polynomial, parse_monomial, parse_polynomial
)
from srdmod.domains.sralgebra.service import SRAlgebraService
from srdmod.domains.verification.generators import exhaustive_complexes, random_complexes
from srdmod.domains.weyl.service import WeylService


def test_tripp_face_ideal(tripp):
    """Test generators xw, yw, zw, xyz"""
    generators = [format_monomial(tripp.labels, g) for g in SRAlgebraService.face_ideal_generators(tripp)]
    assert generators == ["x*w", "y*w", "z*w", "x*y*z"]


def test_tripp_minimal_primes(tripp):
    primes = [ComplexService.names(tripp, p) for p in SRAlgebraService.minimal_primes(tripp)]
    assert primes == [["x", "w"], ["y", "w"], ["z", "w"], ["x", "y", "z"]]


def test_full_simplex_zero_ideal():
    full = ComplexService.full_simplex(3)
    assert SRAlgebraService.face_ideal(full).is_zero
    assert SRAlgebraService.minimal_primes(full) == [0]
    assert SRAlgebraService.krull_dim(full) == 3


def test_tripp_hilbert(tripp):
    """Test H(R, j) and the iterated Hilbert function"""
    data = SRAlgebraService.hilbert_data(tripp, 4)
    assert data.f_vector == [1, 4, 3]
    assert data.H == [1, 4, 7, 10, 13]
    assert data.H1 == [1, 5, 12, 22, 35]
    assert data.r == 2
    assert SRAlgebraService.iterated_hilbert(tripp, 4) == 35
    with pytest.raises(DomainError):
        SRAlgebraService.hilbert(tripp, -1)


def test_hilbert_matches_monomial_count():
    """Test the closed form against counting face-supported monomials"""
    for complex_ in random_complexes(6, 25, seed=42):
        for j in range(9):
            assert SRAlgebraService.hilbert(complex_, j) == SRAlgebraService.count_monomials_bruteforce(complex_, j)


def test_face_ideal_is_intersection_of_primes():
    for complex_ in random_complexes(5, 20, seed=7):
        primes = [SRAlgebraService.prime_ideal(complex_.n, p) for p in SRAlgebraService.minimal_primes(complex_)]
        assert MonomialIdeal.intersect_all(complex_.n, primes) == SRAlgebraService.face_ideal(complex_)


def test_monomial_ideal_operations():
    """Test minimal generators, colon and saturation"""
    ideal = MonomialIdeal(2, [(2, 0), (1, 1), (2, 1)])
    assert ideal.generators == ((1, 1), (2, 0))
    assert ideal.contains((3, 5))
    assert not ideal.contains((0, 4))
    assert ideal.colon((1, 0)) == MonomialIdeal(2, [(1, 0), (0, 1)])
    saturated, k = ideal.saturate((1, 0))
    assert saturated.is_unit
    assert k == 2


def test_saturate_tripp_at_x(tripp):
    """Test 0 : x^inf in the face ideal ring is (w, yz)"""
    saturated, k = SRAlgebraService.face_ideal(tripp).saturate((1, 0, 0, 0))
    assert saturated == MonomialIdeal(4, [(0, 0, 0, 1), (0, 1, 1, 0)])
    assert k == 1


def test_reduce_kills_non_faces(tripp, QQ):
    poly = parse_polynomial("x*w + 2*x*y - 1/2*w^3", tripp.labels, QQ)
    assert format_polynomial(SRAlgebraService.reduce(tripp, poly)) == format_polynomial(
        parse_polynomial("2*x*y - 1/2*w^3", tripp.labels, QQ)
    )


def test_polynomial_literals(tripp, QQ, GF3):
    """Test labels, positional names and field mapping"""
    assert parse_polynomial("x1*x4", tripp.labels, QQ) == parse_polynomial("x*w", tripp.labels, QQ)
    assert not parse_polynomial("3*x", tripp.labels, GF3)
    with pytest.raises(ParseError):
        parse_polynomial("x*q", tripp.labels, QQ)
    with pytest.raises(ParseError):
        parse_polynomial("", tripp.labels, QQ)
    assert parse_monomial("x*y^2", tripp.labels) == (1, 2, 0, 0)
    with pytest.raises(ParseError):
        parse_monomial("x+y", tripp.labels)


def test_random_complexes_reproducible():
    first = [ComplexService.dump(c) for c in random_complexes(5, 10, seed=3)]
    second = [ComplexService.dump(c) for c in random_complexes(5, 10, seed=3)]
    assert first == second


def test_two_edges_ideal_and_primes(two_edges):
    """Test (ac, ad, bc, bd) with primes (a, b) and (c, d)"""
    generators = [format_monomial(two_edges.labels, g) for g in SRAlgebraService.face_ideal_generators(two_edges)]
    assert generators == ["a*c", "a*d", "b*c", "b*d"]
    primes = [ComplexService.names(two_edges, p) for p in SRAlgebraService.minimal_primes(two_edges)]
    assert primes == [["a", "b"], ["c", "d"]]
    assert SRAlgebraService.krull_dim(two_edges) == 2


def test_krull_dim_edge_cases():
    assert SRAlgebraService.krull_dim(ComplexService.from_facets([], 0)) == 0
    assert SRAlgebraService.krull_dim(ComplexService.from_facets([[0]], 1)) == 1


def test_squarefree_membership_exhaustive():
    """Test a squarefree monomial is in the face ideal exactly when its support is not a face"""
    for complex_ in exhaustive_complexes(4):
        ideal = SRAlgebraService.face_ideal(complex_)
        faces = ComplexService.face_set(complex_)
        for mask in range(1 << complex_.n):
            assert ideal.contains(indicator(complex_.n, mask)) == (mask not in faces)


def test_squarefree_membership_six_vertices():
    for complex_ in random_complexes(6, 300, seed=11):
        ideal = SRAlgebraService.face_ideal(complex_)
        faces = ComplexService.face_set(complex_)
        for mask in range(1 << complex_.n):
            assert ideal.contains(indicator(complex_.n, mask)) == (mask not in faces)


def test_reduce_examples(tripp, QQ, GF2):
    """Test x w + x^2 -> x^2 and (x + w)^2 -> x^2 + w^2"""
    assert SRAlgebraService.reduce(tripp, parse_polynomial("x*w + x^2", tripp.labels, QQ)) == \
        parse_polynomial("x^2", tripp.labels, QQ)
    assert SRAlgebraService.reduce(tripp, parse_polynomial("(x + w)^2", tripp.labels, QQ)) == \
        parse_polynomial("x^2 + w^2", tripp.labels, QQ)
    assert not SRAlgebraService.reduce(tripp, SRAlgebraService.ring(tripp, QQ).zero)
    # In characteristic 2 the cross term is already zero before reduction
    square = parse_polynomial("(x + w)^2", tripp.labels, GF2)
    assert square == parse_polynomial("x^2 + w^2", tripp.labels, GF2)
    assert SRAlgebraService.reduce(tripp, square) == square
    assert not SRAlgebraService.reduce(tripp, parse_polynomial("x*w + x*y*z", tripp.labels, GF2))


@pytest.mark.parametrize("p", [0, 2, 3])
def test_reduce_idempotent_and_multiplicative(p):
    """Test reduce(reduce f) = reduce f and reduce(f g) = reduce(reduce f reduce g)"""
    field = get_field(p)
    rng = random.Random(42)
    for complex_ in random_complexes(5, 20, seed=5):
        ring = SRAlgebraService.ring(complex_, field)
        for _ in range(10):
            f = WeylService.random_polynomial(rng, ring, 4, terms=4)
            g = WeylService.random_polynomial(rng, ring, 4, terms=4)
            rf = SRAlgebraService.reduce(complex_, f)
            rg = SRAlgebraService.reduce(complex_, g)
            assert SRAlgebraService.reduce(complex_, rf) == rf
            assert SRAlgebraService.reduce(complex_, f * g) == SRAlgebraService.reduce(complex_, rf * rg)
