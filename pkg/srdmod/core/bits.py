# srdmod/core/bits.py
from typing import Iterable, Iterator, List, Tuple

Exponent = Tuple[int, ...]


def mask_of(vertices: Iterable[int]) -> int:
    """Bit-vector of a vertex set"""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def vertices_of(mask: int) -> List[int]:
    """Sorted vertex indices of a bit-vector"""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def is_subset(small: int, big: int) -> bool:
    return small & ~big == 0


def submasks(mask: int) -> Iterator[int]:
    """All subsets of a bit-vector, from mask itself down to 0"""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def support(exponent: Exponent) -> int:
    """Indices with a nonzero entry, as a bit-vector"""
    mask = 0
    for i, e in enumerate(exponent):
        if e:
            mask |= 1 << i
    return mask


def positive_support(exponent: Exponent) -> int:
    mask = 0
    for i, e in enumerate(exponent):
        if e > 0:
            mask |= 1 << i
    return mask


def unit(n: int, i: int, k: int = 1) -> Exponent:
    return tuple(k if j == i else 0 for j in range(n))


def zero(n: int) -> Exponent:
    return (0,) * n


def add(left: Exponent, right: Exponent) -> Exponent:
    return tuple(a + b for a, b in zip(left, right))


def sub(left: Exponent, right: Exponent) -> Exponent:
    return tuple(a - b for a, b in zip(left, right))


def scale(exponent: Exponent, k: int) -> Exponent:
    return tuple(k * e for e in exponent)


def dominates(big: Exponent, small: Exponent) -> bool:
    return all(a >= b for a, b in zip(big, small))


def indicator(n: int, mask: int) -> Exponent:
    """0/1 exponent vector of a vertex set"""
    return tuple((mask >> i) & 1 for i in range(n))


def compositions(n: int, degree: int) -> List[Exponent]:
    """Exponent vectors in N^n of total degree exactly `degree`, lex descending"""
    if n == 0:
        return [()] if degree == 0 else []
    if n == 1:
        return [(degree,)]
    out: List[Exponent] = []
    for first in range(degree, -1, -1):
        for rest in compositions(n - 1, degree - first):
            out.append((first,) + rest)
    return out


def compositions_up_to(n: int, degree: int) -> List[Exponent]:
    """Exponent vectors of total degree <= degree, by degree then lex"""
    out: List[Exponent] = []
    for d in range(degree + 1):
        out.extend(compositions(n, d))
    return out


def bounded_vectors(bounds: Exponent) -> List[Exponent]:
    """All v with 0 <= v_i <= bounds_i"""
    out: List[Exponent] = [()]
    for b in bounds:
        out = [v + (k,) for v in out for k in range(b + 1)]
    return out
