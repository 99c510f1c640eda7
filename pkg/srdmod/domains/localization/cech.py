# srdmod/domains/localization/cech.py
import itertools
import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.domains.domain import Domain

from srdmod.core.bits import Exponent, mask_of, popcount, positive_support
from srdmod.core.linalg import Vector, in_span, kernel, rank
from srdmod.domains.complex.schemas import SimplicialComplex
from srdmod.domains.complex.service import ComplexService, face_key

logger = logging.getLogger(__name__)

# A cell is a subset of the generators, as a bitmask over their positions
Cell = int


class CechComplex:
    """Multigraded pieces of 0 -> R -> sum R_(f_i) -> ... -> R_(f_1...f_s) -> 0 for monomial f_i"""

    def __init__(self, complex_: SimplicialComplex, generators: Sequence[Exponent], field: Domain):
        self.complex = complex_
        self.generators = tuple(tuple(g) for g in generators)
        self.field = field
        self.faces = ComplexService.face_set(complex_)
        s = len(self.generators)
        self.cells: Dict[int, List[Cell]] = {j: [] for j in range(s + 1)}
        for cell in range(1 << s):
            self.cells[popcount(cell)].append(cell)
        self.supports = {
            cell: mask_of(v for k, g in enumerate(self.generators) if (cell >> k) & 1 for v, e in enumerate(g) if e)
            for cell in range(1 << s)
        }
        self._cache: Dict[Tuple[int, Exponent], Tuple[List[Cell], List[Vector]]] = {}

    @property
    def length(self) -> int:
        return len(self.generators)

    def cell_nonzero(self, cell: Cell, m: Exponent) -> bool:
        """x^m != 0 in R localized at the cell's product"""
        g = self.supports[cell]
        if any(e < 0 and not (g >> i) & 1 for i, e in enumerate(m)):
            return False
        return positive_support(m) | g in self.faces

    def differential(self, j: int, m: Exponent) -> Tuple[List[Cell], List[Vector]]:
        """Nonzero degree-j cells at m and the columns of d^j on them"""
        key = (j, m)
        if key not in self._cache:
            sources = [c for c in self.cells.get(j, []) if self.cell_nonzero(c, m)]
            columns = []
            for cell in sources:
                column = {}
                for k in range(self.length):
                    if (cell >> k) & 1:
                        continue
                    target = cell | (1 << k)
                    if self.cell_nonzero(target, m):
                        # Sign from the position of k inside the target
                        column[target] = self.field(-1 if popcount(cell & ((1 << k) - 1)) % 2 else 1)
                columns.append(column)
            self._cache[key] = (sources, columns)
        return self._cache[key]

    def square_zero(self, m: Exponent) -> bool:
        for j in range(self.length):
            _, first = self.differential(j, m)
            targets, second = self.differential(j + 1, m)
            index = {cell: pos for pos, cell in enumerate(targets)}
            for column in first:
                image: Dict[Cell, object] = {}
                for cell, value in column.items():
                    for target, sign in second[index[cell]].items():
                        image[target] = image.get(target, self.field.zero) + value * sign
                if any(image.values()):
                    return False
        return True

    def image(self, j: int, m: Exponent) -> List[Vector]:
        """Columns of d^(j-1) landing at degree j"""
        if j == 0:
            return []
        return self.differential(j - 1, m)[1]

    def dimension(self, j: int, m: Exponent) -> int:
        sources, columns = self.differential(j, m)
        if not sources:
            return 0
        return len(sources) - rank(columns, self.field) - rank(self.image(j, m), self.field)

    def classes(self, j: int, m: Exponent) -> List[Vector]:
        """Cocycles whose classes form a basis of H^j at m"""
        sources, columns = self.differential(j, m)
        if not sources:
            return []
        boundaries = self.image(j, m)
        chosen: List[Vector] = []
        for relation in kernel(columns, self.field):
            cocycle = {cell: c for cell, c in zip(sources, relation) if c}
            if not in_span(boundaries + chosen, cocycle, self.field):
                chosen.append(cocycle)
        return chosen

    def multiply(self, cocycle: Vector, m: Exponent, u: Exponent) -> Vector:
        """x^u times a cochain of degree m, landing at degree m + u"""
        target = tuple(a + b for a, b in zip(m, u))
        return {cell: c for cell, c in cocycle.items() if self.cell_nonzero(cell, target)}

    def kills(self, cocycle: Vector, j: int, m: Exponent, u: Exponent) -> bool:
        product = self.multiply(cocycle, m, u)
        target = tuple(a + b for a, b in zip(m, u))
        return in_span(self.image(j, target), product, self.field)


@lru_cache(maxsize=8)
def box_points(n: int, lo: int, hi: int) -> Tuple[Exponent, ...]:
    return tuple(itertools.product(range(lo, hi + 1), repeat=n))


def cohomology_table(cech: CechComplex, box: Tuple[int, int]) -> Tuple[List[Tuple[int, Exponent, int]], bool]:
    """Nonzero dimensions (j, m, dim) over the box, and whether d o d = 0 everywhere"""
    lo, hi = box
    entries = []
    square_zero = True
    for m in box_points(cech.complex.n, lo, hi):
        if not cech.square_zero(m):
            logger.error(f"Cech differentials do not compose to zero at {list(m)}")
            square_zero = False
        for j in range(cech.length + 1):
            dim = cech.dimension(j, m)
            if dim:
                entries.append((j, m, dim))
    logger.debug(f"Cech table over {len(box_points(cech.complex.n, lo, hi))} multidegrees: {len(entries)} nonzero")
    return entries, square_zero


def annihilator_prime(cech: CechComplex, cocycle: Vector, j: int, m: Exponent, box: Tuple[int, int]) -> Optional[int]:
    """Prime P (vertex mask) with x_v killing the class exactly for v in P, or None

    Checked only when every m + e_v stays in the box. P is kept only if the largest monomial
    in the remaining variables that stays in the box does not kill the class; kill sets are
    closed upward, so this covers every such monomial.
    """
    _, hi = box
    n = cech.complex.n
    if any(e >= hi for e in m):
        return None
    prime = 0
    for v in range(n):
        u = tuple(1 if k == v else 0 for k in range(n))
        if cech.kills(cocycle, j, m, u):
            prime |= 1 << v
    top = tuple(0 if (prime >> v) & 1 else hi - m[v] for v in range(n))
    if any(top) and cech.kills(cocycle, j, m, top):
        return None
    return prime


def candidate_primes(cech: CechComplex, j: int, entries: List[Tuple[int, Exponent, int]],
                     box: Tuple[int, int]) -> List[Tuple[int, Exponent]]:
    """Distinct candidate primes for H^j, each with the first multidegree exhibiting it"""
    found: Dict[int, Exponent] = {}
    for degree, m, _ in entries:
        if degree != j:
            continue
        for cocycle in cech.classes(j, m):
            prime = annihilator_prime(cech, cocycle, j, m, box)
            if prime is not None and prime not in found:
                found[prime] = m
    return [(prime, found[prime]) for prime in sorted(found, key=face_key)]
