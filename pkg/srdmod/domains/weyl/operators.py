# srdmod/domains/weyl/operators.py
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

from sympy.polys.domains.domain import Domain
from sympy.polys.rings import PolyElement

from srdmod.core.bits import Exponent, unit, zero
from srdmod.core.fields import same_field

# (a, t) encodes x^a d^[t]
Key = Tuple[Exponent, Exponent]


class DiffOp:
    """Finite combination of x^a d^[t] with every x-factor left of every divided power"""

    __slots__ = ("field", "n", "terms")

    def __init__(self, field: Domain, n: int, terms: Optional[Dict[Key, Any]] = None):
        self.field = field
        self.n = n
        self.terms: Dict[Key, Any] = {}
        for key, coeff in (terms or {}).items():
            if coeff:
                self.terms[key] = coeff

    @classmethod
    def zero(cls, field: Domain, n: int) -> "DiffOp":
        return cls(field, n)

    @classmethod
    def monomial(cls, field: Domain, n: int, a: Exponent, t: Exponent, coeff=None) -> "DiffOp":
        return cls(field, n, {(tuple(a), tuple(t)): field.one if coeff is None else coeff})

    @classmethod
    def one(cls, field: Domain, n: int) -> "DiffOp":
        return cls.monomial(field, n, zero(n), zero(n))

    @classmethod
    def scalar(cls, field: Domain, n: int, value) -> "DiffOp":
        return cls.monomial(field, n, zero(n), zero(n), value)

    @classmethod
    def divided_power(cls, field: Domain, n: int, t: Exponent) -> "DiffOp":
        return cls.monomial(field, n, zero(n), t)

    @classmethod
    def xdx(cls, field: Domain, n: int, i: int, t: int) -> "DiffOp":
        """x_i d_i^[t]; t = 0 is multiplication by x_i"""
        return cls.monomial(field, n, unit(n, i), unit(n, i, t))

    @classmethod
    def from_poly(cls, poly: PolyElement) -> "DiffOp":
        """Multiplication by a polynomial"""
        n = poly.ring.ngens
        return cls(poly.ring.domain, n, {(tuple(m), zero(n)): c for m, c in poly.items()})

    def _combine(self, other: "DiffOp", sign: int) -> "DiffOp":
        same_field(self.field, other.field)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, self.field.zero) + (coeff if sign > 0 else -coeff)
        return DiffOp(self.field, self.n, out)

    def __add__(self, other: "DiffOp") -> "DiffOp":
        return self._combine(other, 1)

    def __sub__(self, other: "DiffOp") -> "DiffOp":
        return self._combine(other, -1)

    def __neg__(self) -> "DiffOp":
        return DiffOp(self.field, self.n, {k: -c for k, c in self.terms.items()})

    def scale(self, value) -> "DiffOp":
        if isinstance(value, int):
            value = self.field(value)
        return DiffOp(self.field, self.n, {k: c * value for k, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, DiffOp):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Key, Any]]:
        return iter(self.sorted_terms())

    def sorted_terms(self) -> List[Tuple[Key, Any]]:
        """Terms in lexicographic order on (a, t)"""
        return sorted(self.terms.items())

    @property
    def order(self) -> int:
        """Largest total divided-power degree; -1 for the zero operator"""
        return max((sum(t) for _, t in self.terms), default=-1)

    @property
    def degree(self) -> int:
        """Bernstein degree |a| + |t|; -1 for the zero operator"""
        return max((sum(a) + sum(t) for a, t in self.terms), default=-1)

    def coefficient(self, a: Exponent, t: Exponent):
        return self.terms.get((tuple(a), tuple(t)), self.field.zero)

    def format(self, labels: Sequence[str]) -> str:
        return format_operator(self, labels)

    def __repr__(self) -> str:
        return f"DiffOp({format_operator(self, [f'x{i + 1}' for i in range(self.n)])})"


def format_term(labels: Sequence[str], a: Exponent, t: Exponent) -> str:
    parts = []
    for label, e in zip(labels, a):
        if e == 1:
            parts.append(label)
        elif e:
            parts.append(f"{label}^{e}")
    for label, e in zip(labels, t):
        if e:
            parts.append(f"d{label}^[{e}]")
    return " ".join(parts)


def format_operator(op: DiffOp, labels: Sequence[str]) -> str:
    """Literal form, e.g. `x^2 dx^[3] + 5 y dy^[1]`"""
    if not op:
        return "0"
    out = []
    for (a, t), coeff in op.sorted_terms():
        value = op.field.to_sympy(coeff)
        p = op.field.characteristic()
        if p:
            value = value % p
        sign = "-" if value < 0 else "+"
        if sign == "-":
            value = -value
        body = format_term(labels, a, t)
        if not body:
            text = str(value)
        elif value == 1:
            text = body
        else:
            text = f"{value} {body}"
        out.append((sign, text))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, term in out[1:]:
        text += f" {sign} {term}"
    return text
