# test_v1/test_idealizer.py
import itertools

import pytest

from srdmod.core.bits import mask_of, vertices_of
from srdmod.core.errors import DomainError
from srdmod.core.schemas import Verdict
from srdmod.domains.complex.schemas import TSpaceVerdict
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.idealizer.operators import DROperator
from srdmod.domains.idealizer.service import IdealizerService
from srdmod.domains.verification.generators import exhaustive_complexes
from srdmod.domains.weyl.operators import DiffOp

W = (0, 0, 0, 1)
X = (1, 0, 0, 0)
ZERO = (0, 0, 0, 0)


def test_tripp_membership(tripp, QQ):
    """Test w d_w is in the idealizer and d_w is not"""
    assert IdealizerService.traves_member(W, W, tripp)
    assert not IdealizerService.traves_member(ZERO, W, tripp)
    assert not IdealizerService.traves_member(X, W, tripp)
    assert IdealizerService.idealizer_oracle(W, W, tripp, QQ)
    assert not IdealizerService.idealizer_oracle(ZERO, W, tripp, QQ)


def test_tripp_basis_levels(tripp):
    """Test level sizes 1, 5, 16"""
    assert len(IdealizerService.dr_basis_up_to(tripp, 0)) == 1
    assert len(IdealizerService.dr_basis_up_to(tripp, 1)) == 5
    assert len(IdealizerService.dr_basis_up_to(tripp, 2)) == 16


def test_tripp_xdelx(tripp, QQ):
    check = IdealizerService.verify_xdelx(tripp, 6)
    assert check.verdict == Verdict.PASS
    report = IdealizerService.basis_report(tripp, 2, QQ, compare=True)
    assert report.count == 16
    assert report.disagreements == []
    assert report.basis[0].literal == "1"


def test_xdelx_not_applicable(two_edges):
    assert IdealizerService.verify_xdelx(two_edges, 3).verdict == Verdict.NA
    assert IdealizerService.verify_xdelx(ComplexService.full_simplex(2), 3).verdict == Verdict.NA


def test_criterion_matches_oracle_over_rationals(tripp, two_edges, QQ):
    assert IdealizerService.traves_disagreements(tripp, 4, QQ) == []
    assert IdealizerService.traves_disagreements(two_edges, 3, QQ) == []


def test_non_t_space_has_extra_operators(two_edges):
    """Test a basis monomial with supp(t) outside supp(a) on two disjoint edges"""
    basis = set(IdealizerService.dr_basis_up_to(two_edges, 2))
    expected = set(IdealizerService.xdelx_expected(two_edges, 2))
    assert expected < basis
    # a d_b preserves (ac, ad, bc, bd)
    assert ((1, 0, 0, 0), (0, 1, 0, 0)) in basis


def test_dr_operator_quotient_and_check(tripp, QQ):
    """Test non-face x-parts vanish and non-members are refused"""
    op = DiffOp.monomial(QQ, 4, (1, 0, 0, 1), W) + DiffOp.monomial(QQ, 4, W, W)
    assert DROperator(op, tripp).op == DiffOp.monomial(QQ, 4, W, W)
    with pytest.raises(DomainError):
        DROperator(DiffOp.monomial(QQ, 4, ZERO, W), tripp)
    with pytest.raises(DomainError):
        DROperator(DiffOp.one(QQ, 2), tripp)


def test_compose_dr_stays_in_idealizer(tripp, QQ):
    basis = IdealizerService.dr_basis_up_to(tripp, 2)
    for u in basis:
        for v in basis:
            product = IdealizerService.compose_dr(
                DROperator(DiffOp.monomial(QQ, 4, *u), tripp), DROperator(DiffOp.monomial(QQ, 4, *v), tripp)
            )
            assert all(IdealizerService.traves_member(a, t, tripp) for a, t in product.op.terms)


def test_generator_factorization(QQ):
    report = IdealizerService.generator_factorization((2, 1, 0), (3, 1, 0), QQ)
    assert report.ring_monomial == [1, 0, 0]
    assert report.generators == [[0, 3], [1, 1]]
    assert report.exact
    assert IdealizerService.generator_factorization((1, 0, 0), (0, 1, 0), QQ) is None


@pytest.mark.slow
def test_xdelx_on_all_small_t_spaces(QQ):
    """Test the basis description on every T-space with at most five vertices"""
    for complex_ in exhaustive_complexes(5):
        if ComplexService.is_t_space(complex_) != TSpaceVerdict.TRUE:
            continue
        assert IdealizerService.verify_xdelx(complex_, 6).verdict == Verdict.PASS


def isomorphism_key(complex_):
    """Smallest relabelled facet list; criterion and oracle are invariant under relabelling"""
    keys = []
    for perm in itertools.permutations(range(complex_.n)):
        facets = sorted(mask_of(perm[v] for v in vertices_of(h)) for h in complex_.facets)
        keys.append(tuple(facets))
    return complex_.n, min(keys)


@pytest.mark.slow
def test_criterion_matches_oracle_on_all_small_complexes(QQ):
    """Test the membership criterion against the action oracle for n <= 5 and degree <= 6"""
    seen = set()
    for complex_ in exhaustive_complexes(5):
        key = isomorphism_key(complex_)
        if key in seen:
            continue
        seen.add(key)
        assert IdealizerService.traves_disagreements(complex_, 6, QQ) == [], ComplexService.dump(complex_)
    assert len(seen) > 100
