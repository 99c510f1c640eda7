# srdmod/domains/weyl/parser.py
import re
from math import comb
from typing import Dict, List, Sequence, Tuple

from sympy import Symbol
from sympy.polys.domains import QQ
from sympy.polys.domains.domain import Domain
from sympy.polys.rings import PolyRing

from srdmod.core.errors import ParseError
from srdmod.core.fields import from_rational
from srdmod.domains.sralgebra.polynomial import parse_expression
from srdmod.domains.weyl.operators import DiffOp

D_TOKEN = re.compile(r"(?<![\w])d([A-Za-z_]\w*|\d+)(?:\s*\^\s*\[\s*(\d+)\s*\])?")
POSITIONAL = re.compile(r"^x(\d+)$")


def _variable_index(name: str, labels: Sequence[str]):
    if name.isdigit():
        i = int(name) - 1
        if not 0 <= i < len(labels):
            raise ParseError(f"Derivative index d{name} outside 1..{len(labels)}")
        return i
    if name in labels:
        return list(labels).index(name)
    match = POSITIONAL.match(name)
    if match and 1 <= int(match.group(1)) <= len(labels):
        return int(match.group(1)) - 1
    return None


def _substitute(text: str, labels: Sequence[str]) -> Tuple[str, Dict[str, Tuple[int, int]]]:
    """Replace d<i>^[k] tokens by placeholder symbols"""
    found: Dict[str, Tuple[int, int]] = {}

    def replace(match):
        name, power = match.group(1), match.group(2)
        if f"d{name}" in labels and power is None:
            return match.group(0)
        i = _variable_index(name, labels)
        if i is None:
            return match.group(0)
        k = int(power) if power is not None else 1
        placeholder = f"D__{i}__{k}"
        found[placeholder] = (i, k)
        return f" {placeholder} "

    return D_TOKEN.sub(replace, text), found


def parse_operator(text: str, labels: Sequence[str], field: Domain) -> DiffOp:
    """Literal like `x1^2 d1^[3] + 5 x2 d2^[1]`; x-factors are read as standing left of d-factors"""
    n = len(labels)
    rewritten, placeholders = _substitute(text, labels)
    names = sorted(placeholders)
    expr = parse_expression(rewritten, labels, names)

    symbols = [Symbol(label) for label in labels] + [Symbol(name) for name in names]
    if not symbols:
        symbols = [Symbol("_")]
    try:
        rational = PolyRing(symbols, QQ).from_expr(expr)
    except ValueError as e:
        raise ParseError(f"Not an operator literal: {text!r} ({e})")

    terms = {}
    for monom, coeff in rational.items():
        a = tuple(monom[:n])
        powers: List[List[Tuple[int, int]]] = [[] for _ in range(n)]
        for name, m in zip(names, monom[n:]):
            if m:
                i, k = placeholders[name]
                powers[i].append((k, m))
        t = []
        scale = 1
        for pieces in powers:
            total = 0
            for k, m in pieces:
                for _ in range(m):
                    # d^[s] d^[k] = C(s + k, k) d^[s + k]
                    scale *= comb(total + k, k)
                    total += k
            t.append(total)
        value = from_rational(field, QQ.to_sympy(coeff)) * field(scale)
        key = (a, tuple(t))
        terms[key] = terms.get(key, field.zero) + value
    return DiffOp(field, n, terms)
