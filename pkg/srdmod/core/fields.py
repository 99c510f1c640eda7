# srdmod/core/fields.py
from functools import lru_cache
from math import comb
from typing import Any

from sympy import Rational, isprime
from sympy.polys.domains import GF, QQ
from sympy.polys.domains.domain import Domain

from srdmod.core.errors import FieldError, ParseError

MAX_PRIME = 2 ** 31


@lru_cache(maxsize=None)
def get_field(characteristic: int = 0) -> Domain:
    """Coefficient field for a characteristic: QQ for 0, GF(p) for a prime p"""
    if characteristic == 0:
        return QQ
    if characteristic < 0 or characteristic >= MAX_PRIME or not isprime(characteristic):
        raise FieldError(f"Characteristic must be 0 or a prime below 2^31, got {characteristic}")
    return GF(characteristic)


def characteristic(field: Domain) -> int:
    return int(field.characteristic())


def same_field(left: Domain, right: Domain) -> None:
    """Raise unless two coefficient fields coincide"""
    if left != right:
        raise FieldError(f"Coefficient fields differ: {left} vs {right}")


def from_int(field: Domain, value: int) -> Any:
    return field(int(value))


def binomial(field: Domain, top: int, bottom: int) -> Any:
    """C(top, bottom) as an exact integer mapped into the field; top may be negative"""
    if bottom < 0:
        return field.zero
    if top >= 0:
        return field(comb(top, bottom))
    # C(-m, k) = (-1)^k C(m + k - 1, k)
    value = comb(-top + bottom - 1, bottom)
    return field(-value if bottom % 2 else value)


def from_rational(field: Domain, value: Any) -> Any:
    """Map an int, sympy Rational or 'p/q' string into the field"""
    try:
        if isinstance(value, str):
            value = Rational(value.strip())
        elif not isinstance(value, Rational):
            value = Rational(value)
        num, den = int(value.p), int(value.q)
    except (TypeError, ValueError, AttributeError) as e:
        raise ParseError(f"Not an exact scalar: {value!r} ({e})")
    denominator = field(den)
    if not denominator:
        raise FieldError(f"Denominator {den} vanishes in characteristic {characteristic(field)}")
    return field(num) / denominator


def to_str(field: Domain, value: Any) -> str:
    """Exact string form of a field element ("-1/2", "3")"""
    return str(field.to_sympy(value))
