# srdmod/domains/sralgebra/polynomial.py
import re
from functools import lru_cache
from tokenize import TokenError
from typing import Dict, Sequence, Tuple

from sympy import Symbol
from sympy.parsing.sympy_parser import (
    convert_xor, implicit_multiplication, parse_expr, standard_transformations
)
from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement, PolyRing

from srdmod.core.bits import Exponent
from srdmod.core.errors import ParseError
from srdmod.core.fields import from_rational

TRANSFORMATIONS = standard_transformations + (convert_xor, implicit_multiplication)


@lru_cache(maxsize=None)
def get_ring(labels: Tuple[str, ...], field: Domain) -> PolyRing:
    """Polynomial ring over the vertex variables, degree-lexicographic"""
    return PolyRing([Symbol(label) for label in labels], field, grlex)


def symbol_table(labels: Sequence[str]) -> Dict[str, Symbol]:
    """Names accepted in literals: labels and 1-based positional x<i>"""
    table = {f"x{i + 1}": Symbol(label) for i, label in enumerate(labels)}
    table.update({label: Symbol(label) for label in labels})
    return table


def parse_expression(text: str, labels: Sequence[str], extra: Sequence[str] = ()):
    if not text or not text.strip():
        raise ParseError("Empty literal")
    table = symbol_table(labels)
    table.update({name: Symbol(name) for name in extra})
    try:
        expr = parse_expr(text, local_dict=table, transformations=TRANSFORMATIONS, evaluate=True)
    except (SyntaxError, TypeError, ValueError, TokenError) as e:
        raise ParseError(f"Cannot parse {text!r}: {e}")
    unknown = expr.free_symbols - set(table.values())
    if unknown:
        raise ParseError(f"Unknown variables {sorted(map(str, unknown))} in {text!r}")
    return expr


def from_expression(expr, labels: Sequence[str], field: Domain) -> PolyElement:
    """Exact rational expression to a polynomial over the target field"""
    rational_ring = get_ring(tuple(labels), QQ)
    try:
        rational = rational_ring.from_expr(expr)
    except ValueError as e:
        raise ParseError(f"Not a polynomial: {expr} ({e})")
    ring = get_ring(tuple(labels), field)
    return ring.from_dict(
        {m: from_rational(field, QQ.to_sympy(c)) for m, c in rational.items()}
    )


def parse_polynomial(text: str, labels: Sequence[str], field: Domain) -> PolyElement:
    """Literal like `3*x^2*y - 1/2*w` to a polynomial"""
    return from_expression(parse_expression(text, labels), labels, field)


def monomial(labels: Sequence[str], field: Domain, exponent: Exponent, coeff=None) -> PolyElement:
    ring = get_ring(tuple(labels), field)
    return ring.term_new(tuple(exponent), field.one if coeff is None else coeff)


def format_polynomial(poly: PolyElement) -> str:
    return str(poly).replace("**", "^")


def format_monomial(labels: Sequence[str], exponent: Exponent) -> str:
    parts = []
    for label, e in zip(labels, exponent):
        if e == 1:
            parts.append(label)
        elif e:
            parts.append(f"{label}^{e}")
    return "*".join(parts) or "1"


MONOMIAL_TOKEN = re.compile(r"^\s*([A-Za-z_]\w*)\s*(?:\^\s*(\d+))?\s*$")


def parse_monomial(text: str, labels: Sequence[str]) -> Exponent:
    """`x*y^2` style monomial to an exponent vector"""
    table = {f"x{i + 1}": i for i in range(len(labels))}
    table.update({label: i for i, label in enumerate(labels)})
    exponent = [0] * len(labels)
    if text.strip() == "1":
        return tuple(exponent)
    for factor in text.replace("**", "^").split("*"):
        match = MONOMIAL_TOKEN.match(factor)
        if not match or match.group(1) not in table:
            raise ParseError(f"Cannot parse monomial {text!r}")
        exponent[table[match.group(1)]] += int(match.group(2) or 1)
    return tuple(exponent)
