# srdmod/domains/verification/generators.py
import itertools
import logging
import random
from typing import Iterator, List, Optional, Set, Tuple

from srdmod.core.bits import is_subset, vertices_of
from srdmod.core.config import settings
from srdmod.core.errors import CapacityError
from srdmod.domains.complex.schemas import SimplicialComplex
from srdmod.domains.complex.service import ComplexService
from srdmod.domains.verification.schemas import GenerationMode

logger = logging.getLogger(__name__)


def _antichains(n: int, start: int, chosen: List[int]) -> Iterator[List[int]]:
    """Antichains of nonempty subsets of [n], each listed once in increasing mask order"""
    yield chosen
    for mask in range(start, 1 << n):
        if any(is_subset(mask, h) or is_subset(h, mask) for h in chosen):
            continue
        yield from _antichains(n, mask + 1, chosen + [mask])


def _normalized(n: int, masks: List[int]) -> SimplicialComplex:
    complex_ = ComplexService.from_facets([vertices_of(h) for h in masks], n, warn_slack=False)
    # Fresh labels so equal complexes compare equal whatever slack was dropped
    return ComplexService.from_facets(
        [vertices_of(h) for h in complex_.facets], complex_.n, warn_slack=False
    )


def exhaustive_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every complex on at most n vertices up to slack removal, each once"""
    if n > settings.EXHAUSTIVE_MAX_N:
        raise CapacityError(f"Exhaustive enumeration is limited to n <= {settings.EXHAUSTIVE_MAX_N}")
    if n == 0:
        yield ComplexService.from_facets([], 0)
        return
    seen: Set[Tuple[int, Tuple[int, ...]]] = set()
    for masks in _antichains(n, 1, []):
        if not masks:
            continue
        complex_ = _normalized(n, masks)
        key = (complex_.n, complex_.facets)
        if key in seen:
            continue
        seen.add(key)
        yield complex_


def random_complexes(n: int, count: int, seed: int) -> Iterator[SimplicialComplex]:
    """Reproducible stream of complexes with up to n vertices"""
    rng = random.Random(seed)
    for _ in range(count):
        if n == 0:
            yield ComplexService.from_facets([], 0)
            continue
        k = rng.randint(1, n)
        masks = [rng.randint(1, (1 << n) - 1) for _ in range(k)]
        yield _normalized(n, masks)


def generate_complexes(n: int, mode: GenerationMode, seed: Optional[int] = None,
                       count: Optional[int] = None) -> Iterator[SimplicialComplex]:
    if mode == GenerationMode.EXHAUSTIVE:
        return exhaustive_complexes(n)
    return random_complexes(
        n,
        settings.RANDOM_SAMPLES if count is None else count,
        settings.SEED if seed is None else seed,
    )


def generate_graphs(n: int) -> Iterator[SimplicialComplex]:
    """All graphs on the vertex set [n]; isolated vertices are kept as points"""
    pairs = list(itertools.combinations(range(n), 2))
    for chosen in itertools.product((False, True), repeat=len(pairs)):
        edges = [list(p) for p, on in zip(pairs, chosen) if on]
        yield ComplexService.from_facets(edges + [[v] for v in range(n)], n, warn_slack=False)
