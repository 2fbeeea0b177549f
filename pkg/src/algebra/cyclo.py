"""Exact arithmetic in the cyclotomic fields Q[xi_n], xi_n = exp(2*pi*i/n).

An element is stored as its coefficient vector in the power basis
1, xi_n, ..., xi_n^(phi(n)-1) after reduction modulo the n-th cyclotomic
polynomial, so equality of elements of the same order is equality of vectors.
Orders are never coerced implicitly: use embed() to move a number into a
larger field before combining it with numbers of that field.
"""
import cmath
import logging
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Sequence, Tuple, Union

from sympy import Symbol, cyclotomic_poly

from .errors import InvalidOrderError, NotCoprimeError, OrderMismatchError, SpecParseError

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]

_X = Symbol("x")


@lru_cache(maxsize=None)
def cyclotomic_coefficients(n: int) -> Tuple[int, ...]:
    """Integer coefficients of Phi_n, lowest degree first. Phi_n is monic."""
    if n < 1:
        raise InvalidOrderError(f"cyclotomic order must be a positive integer, got {n}")
    poly = cyclotomic_poly(n, _X, polys=True)
    coeffs = tuple(int(c) for c in reversed(poly.all_coeffs()))
    logger.debug(f"Phi_{n} has degree {len(coeffs) - 1}")
    return coeffs


def phi(n: int) -> int:
    return len(cyclotomic_coefficients(n)) - 1


def _reduce(n: int, raw: Sequence[Rational]) -> Tuple[Fraction, ...]:
    # raw[k] is the coefficient of xi_n^k; fold k mod n, then divide out Phi_n
    folded = [0] * n
    for k, c in enumerate(raw):
        if c:
            folded[k % n] += c
    modulus = cyclotomic_coefficients(n)
    d = len(modulus) - 1
    for top in range(n - 1, d - 1, -1):
        c = folded[top]
        if not c:
            continue
        shift = top - d
        for t in range(d):
            if modulus[t]:
                folded[shift + t] -= c * modulus[t]
    return tuple(Fraction(c) for c in folded[:d])


class CycClass(str, Enum):
    RATIONAL = "rational"
    RATIONAL_INTEGER = "rational_integer"
    CYCLOTOMIC_INTEGER = "cyclotomic_integer"
    GENERAL = "general"


@dataclass(frozen=True)
class CycNumber:
    order: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise InvalidOrderError(f"cyclotomic order must be a positive integer, got {self.order!r}")
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != phi(self.order):
            raise InvalidOrderError(
                f"Q[xi_{self.order}] needs {phi(self.order)} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    # --- construction -----------------------------------------------------

    @classmethod
    def from_poly(cls, n: int, raw: Sequence[Rational]) -> "CycNumber":
        """Reduce sum raw[k]*xi_n^k, for raw of any length, to canonical form."""
        if n < 1:
            raise InvalidOrderError(f"cyclotomic order must be a positive integer, got {n}")
        return cls(n, _reduce(n, raw))

    @classmethod
    def from_exponents(cls, n: int, terms: Dict[int, Rational]) -> "CycNumber":
        if n < 1:
            raise InvalidOrderError(f"cyclotomic order must be a positive integer, got {n}")
        raw = [0] * n
        for k, c in terms.items():
            raw[k % n] += c
        return cls(n, _reduce(n, raw))

    @classmethod
    def rational(cls, n: int, value: Rational) -> "CycNumber":
        return cls.from_poly(n, [value])

    @classmethod
    def zero(cls, n: int) -> "CycNumber":
        return cls.rational(n, 0)

    @classmethod
    def one(cls, n: int) -> "CycNumber":
        return cls.rational(n, 1)

    # --- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{render_cyc(self)} is not rational")
        return self.coeffs[0]

    # --- ring operations --------------------------------------------------

    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            if other.order != self.order:
                raise OrderMismatchError(
                    f"cannot combine elements of Q[xi_{self.order}] and Q[xi_{other.order}]; embed first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CycNumber.rational(self.order, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycNumber(self.order, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycNumber(self.order, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return CycNumber(self.order, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNumber(self.order, tuple(x * other for x in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = len(self.coeffs)
        product = [0] * (2 * d - 1)
        for i, x in enumerate(self.coeffs):
            if not x:
                continue
            for j, y in enumerate(other.coeffs):
                if y:
                    product[i + j] += x * y
        return CycNumber(self.order, _reduce(self.order, product))

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        """Exact inverse: the product of the other Galois conjugates over the norm."""
        if self.is_zero():
            raise ZeroDivisionError(f"zero has no inverse in Q[xi_{self.order}]")
        others = CycNumber.one(self.order)
        for s in galois_group(self.order):
            if s.ell != 1:
                others = others * galois_apply(s, self)
        n = (self * others).rational_value()
        return others * (1 / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "CycNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycNumber.one(self.order)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __str__(self) -> str:
        return render_cyc(self)


@dataclass(frozen=True)
class GaloisAut:
    """sigma_ell in Gal(Q[xi_n]/Q), sending xi_n to xi_n^ell."""

    order: int
    ell: int

    def __post_init__(self):
        if self.order < 1:
            raise InvalidOrderError(f"cyclotomic order must be a positive integer, got {self.order}")
        if gcd(self.ell, self.order) != 1:
            raise NotCoprimeError(f"ell={self.ell} is not coprime to n={self.order}")
        object.__setattr__(self, "ell", self.ell % self.order or self.order)

    def compose(self, other: "GaloisAut") -> "GaloisAut":
        if other.order != self.order:
            raise OrderMismatchError(f"sigma in G_{self.order} and G_{other.order} do not compose")
        return GaloisAut(self.order, self.ell * other.ell)

    def inverse(self) -> "GaloisAut":
        if self.order == 1:
            return self
        return GaloisAut(self.order, pow(self.ell, -1, self.order))

    def __call__(self, a: CycNumber) -> CycNumber:
        return galois_apply(self, a)


def galois_group(n: int) -> Tuple[GaloisAut, ...]:
    if n < 1:
        raise InvalidOrderError(f"cyclotomic order must be a positive integer, got {n}")
    return tuple(GaloisAut(n, ell) for ell in range(1, n + 1) if gcd(ell, n) == 1)


def cyc_root(n: int, k: int) -> CycNumber:
    """xi_n^k in canonical form."""
    if n < 1:
        raise InvalidOrderError(f"cyclotomic order must be a positive integer, got {n}")
    return CycNumber.from_exponents(n, {k: 1})


def arith(a: CycNumber, b: CycNumber, op: str) -> CycNumber:
    if a.order != b.order:
        raise OrderMismatchError(f"orders {a.order} and {b.order} differ; embed first")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def embed(a: CycNumber, m: int) -> CycNumber:
    """Image of a under Q[xi_n] -> Q[xi_m], xi_n -> xi_m^(m/n)."""
    if m < 1 or m % a.order:
        raise OrderMismatchError(f"{a.order} does not divide {m}")
    step = m // a.order
    raw = [0] * m
    for k, c in enumerate(a.coeffs):
        if c:
            raw[k * step] += c
    return CycNumber(m, _reduce(m, raw))


def galois_apply(s: GaloisAut, a: CycNumber) -> CycNumber:
    if s.order != a.order:
        raise OrderMismatchError(f"sigma acts on Q[xi_{s.order}], element lives in Q[xi_{a.order}]")
    n = a.order
    raw = [0] * n
    for k, c in enumerate(a.coeffs):
        if c:
            raw[(s.ell * k) % n] += c
    return CycNumber(n, _reduce(n, raw))


def conjugate(a: CycNumber) -> CycNumber:
    """Complex conjugation, i.e. sigma_{n-1}."""
    return galois_apply(GaloisAut(a.order, a.order - 1), a)


def norm(a: CycNumber) -> Fraction:
    result = CycNumber.one(a.order)
    for s in galois_group(a.order):
        result = result * galois_apply(s, a)
    return result.rational_value()


def trace(a: CycNumber) -> Fraction:
    result = CycNumber.zero(a.order)
    for s in galois_group(a.order):
        result = result + galois_apply(s, a)
    return result.rational_value()


def classify(a: CycNumber) -> CycClass:
    integral = all(c.denominator == 1 for c in a.coeffs)
    if a.is_rational():
        return CycClass.RATIONAL_INTEGER if integral else CycClass.RATIONAL
    return CycClass.CYCLOTOMIC_INTEGER if integral else CycClass.GENERAL


def to_complex(a: CycNumber) -> complex:
    """Floating-point value; only ever used for cross-checks and display."""
    total = 0j
    for k, c in enumerate(a.coeffs):
        if c:
            total += float(c) * cmath.exp(2j * cmath.pi * k / a.order)
    return total


# --------------------------
# Text grammar: "1 - 1*z^2 @5"
# --------------------------

def _render_scalar(c: Fraction) -> str:
    c = abs(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_cyc(a: CycNumber) -> str:
    parts = []
    for k, c in enumerate(a.coeffs):
        if not c:
            continue
        if k == 0:
            body = _render_scalar(c)
        else:
            body = f"{_render_scalar(c)}*z" if k == 1 else f"{_render_scalar(c)}*z^{k}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f"- {body}" if c < 0 else f"+ {body}")
    return f"{' '.join(parts) if parts else '0'} @{a.order}"


_TERM = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coef>\d+(?:/\d+)?)\s*(?P<star>\*)?\s*)?"
    r"(?P<z>z(?:\^(?P<exp>-?\d+))?)?\s*"
)


def parse_cyc(text: str) -> CycNumber:
    """Parse the render_cyc grammar. Exponents may exceed phi(n); they are reduced."""
    at = text.rfind("@")
    if at < 0:
        raise SpecParseError("missing order suffix", len(text), "'@<order>'")
    order_text = text[at + 1:].strip()
    if not order_text.isdigit() or int(order_text) < 1:
        raise SpecParseError(f"bad order {order_text!r}", at + 1, "positive integer")
    n = int(order_text)
    body = text[:at]
    terms: Dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(body) and body[pos:].strip():
        m = _TERM.match(body, pos)
        if m is None or m.end() == pos or not (m.group("coef") or m.group("z")):
            raise SpecParseError("malformed term", pos, "coefficient or 'z'")
        if not first and not m.group("sign"):
            raise SpecParseError("terms must be joined by '+' or '-'", m.start(), "'+' or '-'")
        if m.group("star") and not m.group("z"):
            raise SpecParseError("dangling '*'", m.end(), "'z'")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if m.group("sign") == "-":
            coef = -coef
        exp = 0
        if m.group("z"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        terms[exp] = terms.get(exp, Fraction(0)) + coef
        pos = m.end()
        first = False
    return CycNumber.from_exponents(n, terms)
