# srdmod/core/linalg.py
import logging
from typing import Any, Dict, Hashable, List, Optional, Sequence, Tuple

from sympy.polys.domains.domain import Domain
from sympy.polys.matrices import DomainMatrix

logger = logging.getLogger(__name__)

# Sparse coordinate vector: basis key -> field element
Vector = Dict[Hashable, Any]


def _column_matrix(columns: Sequence[Vector], field: Domain) -> Optional[DomainMatrix]:
    """Sparse DomainMatrix whose j-th column holds columns[j]"""
    index: Dict[Hashable, int] = {}
    rows: Dict[int, Dict[int, Any]] = {}
    for j, column in enumerate(columns):
        for key, value in column.items():
            if not value:
                continue
            i = index.setdefault(key, len(index))
            rows.setdefault(i, {})[j] = value
    if not rows:
        return None
    logger.debug(f"Elimination on a {len(index)} x {len(columns)} system over {field}")
    return DomainMatrix(rows, (len(index), len(columns)), field)


def _rref(columns: Sequence[Vector], field: Domain) -> Tuple[Any, Tuple[int, ...]]:
    matrix = _column_matrix(columns, field)
    if matrix is None:
        return None, ()
    reduced, pivots = matrix.rref()
    return reduced.to_Matrix(), tuple(pivots)


def rank(columns: Sequence[Vector], field: Domain) -> int:
    """Exact rank of a family of sparse vectors"""
    _, pivots = _rref(columns, field)
    return len(pivots)


def solve(columns: Sequence[Vector], target: Vector, field: Domain) -> Optional[List[Any]]:
    """Coefficients c with sum c_j columns[j] == target, or None when target is outside the span"""
    augmented = list(columns) + [target]
    last = len(columns)
    reduced, pivots = _rref(augmented, field)
    coefficients = [field.zero] * len(columns)
    if reduced is None:
        return coefficients
    if last in pivots:
        return None
    for row, pivot in enumerate(pivots):
        coefficients[pivot] = field.from_sympy(reduced[row, last])
    return coefficients


def in_span(columns: Sequence[Vector], target: Vector, field: Domain) -> bool:
    return solve(columns, target, field) is not None


def dependency(columns: Sequence[Vector], field: Domain, start: int = 0) -> Optional[Tuple[int, List[Any]]]:
    """First column at or after `start` lying in the span of the columns before it

    Returns its index with a relation sum c_k columns[k] == 0 whose last nonzero entry is 1,
    or None if those columns are independent of everything before them.
    """
    reduced, pivots = _rref(columns, field)
    free = [j for j in range(start, len(columns)) if j not in pivots]
    if not free:
        return None
    j = free[0]
    relation = [field.zero] * len(columns)
    relation[j] = field.one
    if reduced is not None:
        for row, pivot in enumerate(pivots):
            if pivot < j:
                relation[pivot] = -field.from_sympy(reduced[row, j])
    return j, relation


def kernel(columns: Sequence[Vector], field: Domain) -> List[List[Any]]:
    """Basis of the relations sum c_j columns[j] == 0, one per non-pivot column"""
    reduced, pivots = _rref(columns, field)
    out = []
    for j in range(len(columns)):
        if j in pivots:
            continue
        relation = [field.zero] * len(columns)
        relation[j] = field.one
        if reduced is not None:
            for row, pivot in enumerate(pivots):
                if pivot < j:
                    relation[pivot] = -field.from_sympy(reduced[row, j])
        out.append(relation)
    return out
