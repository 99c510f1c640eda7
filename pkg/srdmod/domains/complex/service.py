# srdmod/domains/complex/service.py
import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Union

from pydantic import ValidationError

from srdmod.core.bits import is_subset, mask_of, popcount, submasks, vertices_of
from srdmod.core.config import settings
from srdmod.core.errors import CapacityError, DomainError, ParseError
from srdmod.domains.complex.schemas import (
    ComplexFile, ComplexSummary, Face, SimplicialComplex, TSpaceReport, TSpaceVerdict
)

logger = logging.getLogger(__name__)

HARD_VERTEX_LIMIT = 64

Member = Union[int, str]


def face_key(mask: Face):
    """Canonical order on vertex sets: by cardinality, then sorted indices"""
    return (popcount(mask), vertices_of(mask))


class ComplexService:

    @staticmethod
    def default_labels(n: int) -> List[str]:
        return [f"x{i + 1}" for i in range(n)]

    @staticmethod
    def member_index(member: Member, labels: Sequence[str], n: int) -> int:
        """Resolve a vertex given by 0-based index or by label"""
        if isinstance(member, bool):
            raise ParseError(f"Invalid vertex {member!r}")
        if isinstance(member, int):
            if not 0 <= member < n:
                raise DomainError(f"Vertex {member} outside [0, {n})")
            return member
        try:
            return list(labels).index(member)
        except ValueError:
            raise ParseError(f"Unknown vertex label {member!r}")

    @staticmethod
    def from_facets(
        candidates: Iterable[Iterable[Member]],
        n: int,
        labels: Optional[Sequence[str]] = None,
        warn_slack: bool = True,
    ) -> SimplicialComplex:
        """Normalize candidate facets into a canonical complex without slack vertices"""
        limit = min(settings.MAX_VERTICES, HARD_VERTEX_LIMIT)
        if n > limit:
            raise CapacityError(f"Complex has {n} vertices, limit is {limit}")
        if n < 0:
            raise DomainError(f"Vertex count must be non-negative, got {n}")
        labels = list(labels) if labels is not None else ComplexService.default_labels(n)
        if len(labels) != n:
            raise ParseError(f"Expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise ParseError("Vertex labels must be distinct")

        masks = {
            mask_of(ComplexService.member_index(m, labels, n) for m in candidate)
            for candidate in candidates
        }
        # Antichain: keep only inclusion-maximal candidates
        facets = [h for h in masks if not any(h != g and is_subset(h, g) for g in masks)]

        covered = 0
        for h in facets:
            covered |= h
        kept = vertices_of(covered)
        slack = [labels[v] for v in range(n) if not (covered >> v) & 1]
        if slack:
            if warn_slack:
                logger.warning(f"Removed slack vertices {slack}")
            else:
                logger.debug(f"Removed slack vertices {slack}")
            reindex = {old: new for new, old in enumerate(kept)}
            facets = [mask_of(reindex[v] for v in vertices_of(h)) for h in facets]
            labels = [labels[v] for v in kept]
        if not kept:
            facets = [0]

        return SimplicialComplex(
            n=len(kept),
            facets=tuple(sorted(facets, key=face_key)),
            labels=tuple(labels),
            slack=tuple(slack),
        )

    @staticmethod
    def full_simplex(n: int, labels: Optional[Sequence[str]] = None) -> SimplicialComplex:
        """Complex whose ring is the full polynomial ring"""
        return ComplexService.from_facets([range(n)], n, labels)

    @staticmethod
    def parse(data: Dict) -> SimplicialComplex:
        """Build a complex from its JSON document"""
        try:
            doc = ComplexFile.model_validate(data)
        except ValidationError as e:
            raise ParseError(f"Malformed complex: {e.errors()[0]['msg']}")
        return ComplexService.from_facets(doc.facets, doc.n, doc.labels)

    @staticmethod
    def load(path: Union[str, Path]) -> SimplicialComplex:
        """Read a complex file"""
        try:
            data = json.loads(Path(path).read_text())
        except OSError as e:
            raise ParseError(f"Cannot read complex file {path}: {e.strerror}")
        except json.JSONDecodeError as e:
            raise ParseError(f"Complex file {path} is not valid JSON: {e.msg}")
        if not isinstance(data, dict):
            raise ParseError(f"Complex file {path} must hold a JSON object")
        return ComplexService.parse(data)

    @staticmethod
    def dump(complex_: SimplicialComplex) -> Dict:
        return {
            "n": complex_.n,
            "labels": list(complex_.labels),
            "facets": [vertices_of(h) for h in complex_.facets],
        }

    @staticmethod
    def to_mask(complex_: SimplicialComplex, members: Iterable[Member]) -> Face:
        return mask_of(ComplexService.member_index(m, complex_.labels, complex_.n) for m in members)

    @staticmethod
    def names(complex_: SimplicialComplex, mask: Face) -> List[str]:
        return [complex_.labels[v] for v in vertices_of(mask)]

    @staticmethod
    def faces(complex_: SimplicialComplex) -> List[Face]:
        """All faces in canonical order"""
        found = set()
        for h in complex_.facets:
            found.update(submasks(h))
        return sorted(found, key=face_key)

    @staticmethod
    @lru_cache(maxsize=256)
    def face_set(complex_: SimplicialComplex) -> FrozenSet[Face]:
        return frozenset(ComplexService.faces(complex_))

    @staticmethod
    def f_vector(complex_: SimplicialComplex) -> List[int]:
        """Entry s counts faces of cardinality s, so entry 0 is f_{-1} = 1"""
        counts = [0] * (complex_.n + 1)
        for face in ComplexService.faces(complex_):
            counts[popcount(face)] += 1
        while len(counts) > 1 and counts[-1] == 0:
            counts.pop()
        return counts

    @staticmethod
    def summary(complex_: SimplicialComplex) -> ComplexSummary:
        f_vector = ComplexService.f_vector(complex_)
        return ComplexSummary(
            n=complex_.n,
            labels=list(complex_.labels),
            facets=[ComplexService.names(complex_, h) for h in complex_.facets],
            slack=list(complex_.slack),
            f_vector=f_vector,
            face_count=sum(f_vector),
        )

    @staticmethod
    def is_face(complex_: SimplicialComplex, face: Face) -> bool:
        """Check whether a vertex set lies in some facet"""
        return any(is_subset(face, h) for h in complex_.facets)

    @staticmethod
    def closure(complex_: SimplicialComplex, face: Face) -> Face:
        """Intersection of all facets containing a face"""
        containing = [h for h in complex_.facets if is_subset(face, h)]
        if not containing:
            raise DomainError(f"{ComplexService.names(complex_, face)} is not a face")
        out = complex_.full
        for h in containing:
            out &= h
        return out

    @staticmethod
    def link(complex_: SimplicialComplex, face: Face) -> SimplicialComplex:
        """Link of a face, as a complex on the vertices outside it"""
        if not ComplexService.is_face(complex_, face):
            raise DomainError(f"Cannot take the link of non-face {ComplexService.names(complex_, face)}")
        outside = [v for v in range(complex_.n) if not (face >> v) & 1]
        reindex = {old: new for new, old in enumerate(outside)}
        candidates = [
            [reindex[v] for v in vertices_of(h & ~face)]
            for h in complex_.facets if is_subset(face, h)
        ]
        return ComplexService.from_facets(
            candidates, len(outside), [complex_.labels[v] for v in outside], warn_slack=False
        )

    @staticmethod
    def separates(complex_: SimplicialComplex, face: Face, other: Face) -> bool:
        """Check for a facet containing `face` but not containing `other`"""
        return any(is_subset(face, h) and not is_subset(other, h) for h in complex_.facets)

    @staticmethod
    def _gate(complex_: SimplicialComplex) -> Optional[TSpaceVerdict]:
        if complex_.is_void:
            return TSpaceVerdict.TRUE
        if complex_.is_full_simplex:
            return TSpaceVerdict.NOT_APPLICABLE
        return None

    @staticmethod
    def t_space_witness(complex_: SimplicialComplex) -> Optional[Dict]:
        """First face whose closure is larger than itself, with an inseparable vertex"""
        for face in ComplexService.faces(complex_):
            extra = ComplexService.closure(complex_, face) & ~face
            if extra:
                return {
                    "face": ComplexService.names(complex_, face),
                    "vertex": complex_.labels[vertices_of(extra)[0]],
                }
        return None

    @staticmethod
    def is_t_space(complex_: SimplicialComplex) -> TSpaceVerdict:
        """Every face separated from every vertex outside it"""
        gated = ComplexService._gate(complex_)
        if gated is not None:
            return gated
        if ComplexService.t_space_witness(complex_) is None:
            return TSpaceVerdict.TRUE
        return TSpaceVerdict.FALSE

    @staticmethod
    def is_t_space_bruteforce(complex_: SimplicialComplex) -> TSpaceVerdict:
        """Literal definition: every face separated from every set it does not contain"""
        gated = ComplexService._gate(complex_)
        if gated is not None:
            return gated
        for face in ComplexService.faces(complex_):
            for other in range(1, complex_.full + 1):
                if not is_subset(other, face) and not ComplexService.separates(complex_, face, other):
                    return TSpaceVerdict.FALSE
        return TSpaceVerdict.TRUE

    @staticmethod
    def t_space_report(complex_: SimplicialComplex) -> TSpaceReport:
        verdict = ComplexService.is_t_space(complex_)
        flag = {TSpaceVerdict.TRUE: True, TSpaceVerdict.FALSE: False}.get(verdict)
        witness = ComplexService.t_space_witness(complex_) if verdict == TSpaceVerdict.FALSE else None
        return TSpaceReport(t_space=flag, verdict=verdict, witness=witness)

    @staticmethod
    def is_graph(complex_: SimplicialComplex) -> bool:
        """Dimension at most one"""
        return all(popcount(h) <= 2 for h in complex_.facets)

    @staticmethod
    def vertex_degrees(complex_: SimplicialComplex) -> List[int]:
        degrees = [0] * complex_.n
        for h in complex_.facets:
            if popcount(h) == 2:
                for v in vertices_of(h):
                    degrees[v] += 1
        return degrees
