# test_v1/test_complex.py
import json

import pytest
import hypothesis.strategies as st
from hypothesis import given, settings as hsettings

from srdmod.core.bits import mask_of
from srdmod.core.errors import CapacityError, DomainError, ParseError
from srdmod.domains.complex.schemas import TSpaceVerdict
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.verification.generators import exhaustive_complexes, generate_graphs


def test_tripp_is_t_space(tripp):
    """Test the hollow triangle with an isolated point"""
    assert ComplexService.is_t_space(tripp) == TSpaceVerdict.TRUE
    report = ComplexService.t_space_report(tripp)
    assert report.t_space is True
    assert report.witness is None


def test_two_edges_not_t_space(two_edges):
    """Test two disjoint edges: a vertex cannot be separated from its neighbour"""
    report = ComplexService.t_space_report(two_edges)
    assert report.verdict == TSpaceVerdict.FALSE
    assert report.t_space is False
    assert report.witness["face"] in (["a"], ["b"], ["c"], ["d"])


def test_gates():
    """Test void complex and full simplex"""
    assert ComplexService.is_t_space(ComplexService.from_facets([], 0)) == TSpaceVerdict.TRUE
    full = ComplexService.full_simplex(3)
    assert full.is_full_simplex
    assert ComplexService.is_t_space(full) == TSpaceVerdict.NOT_APPLICABLE
    assert ComplexService.t_space_report(full).t_space is None


def test_normalization_drops_non_maximal_and_slack(caplog):
    """Test facet antichain normalization and slack vertex removal"""
    complex_ = ComplexService.from_facets([[0, 1], [0], [1]], 3, ["p", "q", "r"])
    assert complex_.n == 2
    assert complex_.labels == ("p", "q")
    assert complex_.slack == ("r",)
    assert complex_.facets == (0b11,)
    assert "slack" in caplog.text


def test_canonical_facet_order(tripp):
    """Test facets sorted by size then indices"""
    assert [ComplexService.names(tripp, h) for h in tripp.facets] == [["w"], ["x", "y"], ["x", "z"], ["y", "z"]]


def test_f_vector_and_summary(tripp):
    """Test face counts"""
    assert ComplexService.f_vector(tripp) == [1, 4, 3]
    summary = ComplexService.summary(tripp)
    assert summary.face_count == 8
    assert summary.slack == []


def test_closure_and_link(tripp, two_edges):
    """Test closure of a face and link computation"""
    a = ComplexService.to_mask(two_edges, ["a"])
    assert ComplexService.closure(two_edges, a) == ComplexService.to_mask(two_edges, ["a", "b"])
    x = ComplexService.to_mask(tripp, ["x"])
    assert ComplexService.closure(tripp, x) == x

    link = ComplexService.link(tripp, x)
    assert link.labels == ("y", "z")
    assert ComplexService.is_t_space(link) == TSpaceVerdict.TRUE
    with pytest.raises(DomainError):
        ComplexService.link(tripp, ComplexService.to_mask(tripp, ["x", "w"]))


def test_graph_helpers(tripp):
    assert ComplexService.is_graph(tripp)
    assert ComplexService.vertex_degrees(tripp) == [2, 2, 2, 0]


def test_parse_errors(tmp_path):
    """Test malformed complex documents"""
    with pytest.raises(ParseError):
        ComplexService.parse({"n": 2, "facets": [["q"]]})
    with pytest.raises(ParseError):
        ComplexService.parse({"n": -1, "facets": []})
    with pytest.raises(ParseError):
        ComplexService.parse({"n": 2, "labels": ["a", "a"], "facets": [[0]]})
    with pytest.raises(DomainError):
        ComplexService.parse({"n": 2, "facets": [[5]]})
    with pytest.raises(CapacityError):
        ComplexService.from_facets([[0]], 65)

    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        ComplexService.load(bad)
    with pytest.raises(ParseError):
        ComplexService.load(tmp_path / "missing.json")


def test_load_dump(tmp_path, tripp):
    """Test dumped documents load back to the same complex"""
    path = tmp_path / "c.json"
    path.write_text(json.dumps(ComplexService.dump(tripp)))
    assert ComplexService.load(path) == tripp


@hsettings(max_examples=60, deadline=None)
@given(st.data())
def test_criterion_matches_definition(data):
    """Test the vertex criterion against the full separation definition"""
    n = data.draw(st.integers(min_value=1, max_value=5))
    masks = data.draw(st.lists(st.integers(min_value=1, max_value=(1 << n) - 1), min_size=1, max_size=5))
    complex_ = ComplexService.from_facets([[v for v in range(n) if (m >> v) & 1] for m in masks], n,
                                          warn_slack=False)
    assert ComplexService.is_t_space(complex_) == ComplexService.is_t_space_bruteforce(complex_)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 7))
def test_graph_law(n):
    """Test a graph is a T-space exactly when no vertex has degree one"""
    for graph in generate_graphs(n):
        verdict = ComplexService.is_t_space(graph)
        if verdict == TSpaceVerdict.NOT_APPLICABLE:
            continue
        assert (verdict == TSpaceVerdict.TRUE) == (1 not in ComplexService.vertex_degrees(graph))


@pytest.mark.slow
def test_links_of_t_spaces():
    """Test links of faces of T-spaces are T-spaces or not applicable"""
    for complex_ in exhaustive_complexes(5):
        if ComplexService.is_t_space(complex_) != TSpaceVerdict.TRUE:
            continue
        for face in ComplexService.faces(complex_):
            assert ComplexService.is_t_space(ComplexService.link(complex_, face)) != TSpaceVerdict.FALSE


def test_to_mask_accepts_labels_and_indices(tripp):
    assert ComplexService.to_mask(tripp, ["x", 3]) == mask_of([0, 3])
