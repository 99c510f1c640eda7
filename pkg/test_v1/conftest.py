# test_v1/conftest.py
import json
from pathlib import Path

import pytest

from srdmod.core.fields import get_field
from srdmod.domains.complex.service import ComplexService

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

TRIPP = {"n": 4, "labels": ["x", "y", "z", "w"], "facets": [["x", "y"], ["x", "z"], ["y", "z"], ["w"]]}
TWO_EDGES = {"n": 4, "labels": ["a", "b", "c", "d"], "facets": [["a", "b"], ["c", "d"]]}


@pytest.fixture
def tripp():
    """Hollow triangle on x, y, z plus an isolated vertex w"""
    return ComplexService.parse(TRIPP)


@pytest.fixture
def two_edges():
    return ComplexService.parse(TWO_EDGES)


@pytest.fixture
def QQ():
    return get_field(0)


@pytest.fixture
def GF2():
    return get_field(2)


@pytest.fixture
def GF3():
    return get_field(3)


@pytest.fixture
def tripp_file(tmp_path):
    path = tmp_path / "tripp.json"
    path.write_text(json.dumps(TRIPP))
    return str(path)


@pytest.fixture
def two_edges_file(tmp_path):
    path = tmp_path / "two_edges.json"
    path.write_text(json.dumps(TWO_EDGES))
    return str(path)
