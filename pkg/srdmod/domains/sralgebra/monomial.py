# srdmod/domains/sralgebra/monomial.py
from typing import Iterable, List, Sequence, Tuple

from srdmod.core.bits import Exponent, dominates


def minimalize(generators: Iterable[Exponent]) -> List[Exponent]:
    """Drop generators divisible by another generator"""
    kept: List[Exponent] = []
    for m in sorted(set(generators), key=lambda e: (sum(e), e)):
        if not any(dominates(m, g) for g in kept):
            kept.append(m)
    return kept


class MonomialIdeal:
    """Monomial ideal of K[x_1..x_n] stored by its minimal generators"""

    __slots__ = ("n", "generators")

    def __init__(self, n: int, generators: Iterable[Exponent] = ()):
        self.n = n
        self.generators: Tuple[Exponent, ...] = tuple(minimalize(generators))

    @classmethod
    def unit(cls, n: int) -> "MonomialIdeal":
        return cls(n, [(0,) * n])

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"MonomialIdeal({list(self.generators)})"

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return (0,) * self.n in self.generators

    def contains(self, monomial: Exponent) -> bool:
        return any(dominates(monomial, g) for g in self.generators)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.n, self.generators + other.generators)

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Generated by pairwise lcms"""
        return MonomialIdeal(
            self.n,
            [tuple(max(a, b) for a, b in zip(g, h)) for g in self.generators for h in other.generators],
        )

    def colon(self, monomial: Exponent) -> "MonomialIdeal":
        """I : x^m, generated by x^max(g - m, 0)"""
        return MonomialIdeal(
            self.n, [tuple(max(a - b, 0) for a, b in zip(g, monomial)) for g in self.generators]
        )

    def saturate(self, monomial: Exponent) -> Tuple["MonomialIdeal", int]:
        """I : x^(k m) for large k, with the first k at which the chain stops growing"""
        current = self
        k = 0
        while True:
            step = current.colon(monomial)
            if step == current:
                return current, k
            current = step
            k += 1

    @staticmethod
    def intersect_all(n: int, ideals: Sequence["MonomialIdeal"]) -> "MonomialIdeal":
        out = MonomialIdeal.unit(n)
        for ideal in ideals:
            out = out.intersect(ideal)
        return out
