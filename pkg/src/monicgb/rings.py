"""Exact arithmetic in the supported commutative coefficient rings.

Four rings are available: the integers Z, the residue rings Z/n (composite
n allowed, so zero divisors are representable), the rationals Q, and
integer Laurent polynomials in one symbol (Z[q, q^-1]).  Elements are
immutable and kept in a unique canonical form, so equality is structural.

Unit detection and unit inversion are exact in every ring; monic division
never needs anything more.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

Z_KIND = "Z"
Q_KIND = "Q"
ZMOD_KIND = "Zmod"
LAURENT_KIND = "LaurentZ"

# Laurent values are sorted ((exponent, coefficient), ...) with no zero
# coefficients; Z and Z/n values are int; Q values are Fraction.
LaurentValue = tuple[tuple[int, int], ...]
Value = Union[int, Fraction, LaurentValue]


class RingMismatchError(ValueError):
    """Operands of a ring operation live in different rings."""


class NonUnitError(ArithmeticError):
    """Attempt to invert an element that is not a unit."""


class CoeffSyntaxError(ValueError):
    """A coefficient string does not conform to the coefficient grammar."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


@dataclass(frozen=True)
class Ring:
    """Descriptor of a coefficient ring; also a factory for its elements."""

    kind: str
    modulus: int = 0
    symbol: str = ""

    def __post_init__(self):
        if self.kind not in (Z_KIND, Q_KIND, ZMOD_KIND, LAURENT_KIND):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.kind == ZMOD_KIND and self.modulus < 2:
            raise ValueError("Zmod modulus must be >= 2")
        if self.kind == LAURENT_KIND and not self.symbol:
            raise ValueError("Laurent ring needs a symbol name")

    def __repr__(self):
        if self.kind == ZMOD_KIND:
            return f"Zmod({self.modulus})"
        if self.kind == LAURENT_KIND:
            return f"LaurentZ({self.symbol!r})"
        return self.kind

    @property
    def zero(self) -> RingElement:
        return self.from_int(0)

    @property
    def one(self) -> RingElement:
        return self.from_int(1)

    def from_int(self, n: int) -> RingElement:
        n = int(n)
        if self.kind == Z_KIND:
            return RingElement(self, n)
        if self.kind == ZMOD_KIND:
            return RingElement(self, n % self.modulus)
        if self.kind == Q_KIND:
            return RingElement(self, Fraction(n))
        return RingElement(self, ((0, n),) if n else ())

    def element(self, value) -> RingElement:
        """Canonicalize a raw value (int, Fraction, exponent map) into the ring."""
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatchError(f"element of {value.ring} used in {self}")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a ring value")
        if isinstance(value, int):
            return self.from_int(value)
        if isinstance(value, Fraction):
            if self.kind != Q_KIND:
                if value.denominator == 1:
                    return self.from_int(value.numerator)
                raise ValueError(f"fraction {value} is not an element of {self}")
            return RingElement(self, value)
        if isinstance(value, dict):
            if self.kind != LAURENT_KIND:
                raise ValueError(f"exponent map is not an element of {self}")
            pairs = tuple(sorted((int(e), int(c)) for e, c in value.items() if c))
            return RingElement(self, pairs)
        raise TypeError(f"cannot interpret {value!r} as an element of {self}")

    def q(self, exponent: int = 1, coefficient: int = 1) -> RingElement:
        """The monomial coefficient * symbol^exponent of a Laurent ring."""
        if self.kind != LAURENT_KIND:
            raise ValueError(f"{self} has no Laurent symbol")
        return self.element({exponent: coefficient})


ZZ = Ring(Z_KIND)
QQ = Ring(Q_KIND)


def Zmod(n: int) -> Ring:
    return Ring(ZMOD_KIND, modulus=n)


def LaurentZ(symbol: str = "q") -> Ring:
    return Ring(LAURENT_KIND, symbol=symbol)


def _laurent_add(a: LaurentValue, b: LaurentValue, sign: int) -> LaurentValue:
    acc = dict(a)
    for e, c in b:
        acc[e] = acc.get(e, 0) + sign * c
    return tuple(sorted((e, c) for e, c in acc.items() if c))


def _laurent_mul(a: LaurentValue, b: LaurentValue) -> LaurentValue:
    acc: dict[int, int] = {}
    for ea, ca in a:
        for eb, cb in b:
            e = ea + eb
            acc[e] = acc.get(e, 0) + ca * cb
    return tuple(sorted((e, c) for e, c in acc.items() if c))


@dataclass(frozen=True)
class RingElement:
    """An element of one of the supported rings, in canonical form."""

    ring: Ring
    value: Value

    def _check(self, other: RingElement) -> None:
        if not isinstance(other, RingElement):
            raise TypeError(f"expected RingElement, got {other!r}")
        if self.ring != other.ring:
            raise RingMismatchError(f"mixed rings {self.ring} and {other.ring}")

    def __bool__(self) -> bool:
        if self.ring.kind == LAURENT_KIND:
            return bool(self.value)
        return self.value != 0

    @property
    def is_zero(self) -> bool:
        return not self

    def __add__(self, other: RingElement) -> RingElement:
        self._check(other)
        k = self.ring.kind
        if k == LAURENT_KIND:
            return RingElement(self.ring, _laurent_add(self.value, other.value, 1))
        v = self.value + other.value
        if k == ZMOD_KIND:
            v %= self.ring.modulus
        return RingElement(self.ring, v)

    def __sub__(self, other: RingElement) -> RingElement:
        self._check(other)
        k = self.ring.kind
        if k == LAURENT_KIND:
            return RingElement(self.ring, _laurent_add(self.value, other.value, -1))
        v = self.value - other.value
        if k == ZMOD_KIND:
            v %= self.ring.modulus
        return RingElement(self.ring, v)

    def __mul__(self, other: RingElement) -> RingElement:
        self._check(other)
        k = self.ring.kind
        if k == LAURENT_KIND:
            return RingElement(self.ring, _laurent_mul(self.value, other.value))
        v = self.value * other.value
        if k == ZMOD_KIND:
            v %= self.ring.modulus
        return RingElement(self.ring, v)

    def __neg__(self) -> RingElement:
        k = self.ring.kind
        if k == LAURENT_KIND:
            return RingElement(self.ring, tuple((e, -c) for e, c in self.value))
        v = -self.value
        if k == ZMOD_KIND:
            v %= self.ring.modulus
        return RingElement(self.ring, v)

    def __pow__(self, n: int) -> RingElement:
        if n < 0:
            return self.inverse() ** (-n)
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_unit(self) -> bool:
        k = self.ring.kind
        if k == Z_KIND:
            return self.value in (1, -1)
        if k == ZMOD_KIND:
            return gcd(self.value, self.ring.modulus) == 1
        if k == Q_KIND:
            return self.value != 0
        return len(self.value) == 1 and self.value[0][1] in (1, -1)

    def inverse(self) -> RingElement:
        """Multiplicative inverse; raises NonUnitError off the unit group."""
        if not self.is_unit():
            raise NonUnitError(f"{format_coeff(self)} is not a unit in {self.ring}")
        k = self.ring.kind
        if k == Z_KIND:
            return self
        if k == ZMOD_KIND:
            return RingElement(self.ring, pow(self.value, -1, self.ring.modulus))
        if k == Q_KIND:
            return RingElement(self.ring, 1 / self.value)
        (e, c), = self.value
        return RingElement(self.ring, ((-e, c),))

    def __repr__(self):
        return f"<{format_coeff(self)} in {self.ring}>"


def arith(op: str, a: RingElement, b: RingElement | None = None) -> RingElement:
    """Named dispatch over the four ring operations."""
    if op == "neg":
        return -a
    if b is None:
        raise TypeError(f"operation {op!r} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def is_unit(a: RingElement) -> bool:
    return a.is_unit()


def invert_unit(a: RingElement) -> RingElement:
    return a.inverse()


def is_negative(a: RingElement) -> bool:
    """Whether the canonical form carries a leading minus sign when printed.

    Z/n representatives live in [0, n) and are never negative.  For Laurent
    elements the sign of the highest-exponent coefficient decides.
    """
    k = a.ring.kind
    if k in (Z_KIND, Q_KIND):
        return a.value < 0
    if k == LAURENT_KIND:
        return bool(a.value) and a.value[-1][1] < 0
    return False


def _format_laurent_term(e: int, c: int, symbol: str) -> str:
    if e == 0:
        return str(c)
    power = symbol if e == 1 else f"{symbol}^{e}"
    if c == 1:
        return power
    if c == -1:
        return f"-{power}"
    return f"{c}*{power}"


def format_coeff(a: RingElement) -> str:
    """Canonical text form; parse_coeff(format_coeff(a), a.ring) == a."""
    k = a.ring.kind
    if k in (Z_KIND, ZMOD_KIND):
        return str(a.value)
    if k == Q_KIND:
        v = a.value
        if v.denominator == 1:
            return str(v.numerator)
        return f"{v.numerator}/{v.denominator}"
    terms = list(reversed(a.value))
    if not terms:
        return "0"
    if len(terms) == 1:
        e, c = terms[0]
        return _format_laurent_term(e, c, a.ring.symbol)
    parts = [_format_laurent_term(terms[0][0], terms[0][1], a.ring.symbol)]
    for e, c in terms[1:]:
        joiner = " - " if c < 0 else " + "
        parts.append(joiner + _format_laurent_term(e, abs(c), a.ring.symbol))
    return "(" + "".join(parts) + ")"


_COEFF_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9]*|[()^*/+-])")


def _tokenize_coeff(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _COEFF_TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise CoeffSyntaxError(f"unexpected character {text[pos]!r}", pos)
            break
        tokens.append((m.group(1), m.start(1)))
        pos = m.end()
    return tokens


class _CoeffParser:
    """Recursive-descent parser for the shared coefficient grammar:

    coeff := int | int "/" nat | ["-"] [nat "*"] sym ["^" int]
           | "(" coeff (("+"|"-") coeff)* ")"
    """

    def __init__(self, tokens: list[tuple[str, int]], ring: Ring, end: int):
        self.tokens = tokens
        self.ring = ring
        self.i = 0
        self.end = end

    def peek(self) -> str | None:
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self) -> int:
        return self.tokens[self.i][1] if self.i < len(self.tokens) else self.end

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise CoeffSyntaxError("unexpected end of coefficient", self.end)
        self.i += 1
        return tok

    def parse(self) -> RingElement:
        value = self.coefficient()
        if self.peek() is not None:
            raise CoeffSyntaxError(f"trailing input {self.peek()!r}", self.pos())
        return value

    def signed_int(self) -> int:
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        tok = self.peek()
        if tok is None or not tok.isdigit():
            raise CoeffSyntaxError("expected an integer", self.pos())
        return sign * int(self.take())

    def coefficient(self) -> RingElement:
        tok = self.peek()
        if tok == "(":
            self.take()
            total = self.coefficient()
            while self.peek() in ("+", "-"):
                op = self.take()
                nxt = self.coefficient()
                total = total - nxt if op == "-" else total + nxt
            if self.peek() != ")":
                raise CoeffSyntaxError("expected ')'", self.pos())
            self.take()
            return total
        negative = False
        if tok == "-":
            self.take()
            negative = True
            tok = self.peek()
        if tok is not None and tok.isdigit():
            pos = self.pos()
            n = int(self.take())
            if self.peek() == "/":
                self.take()
                dtok = self.peek()
                if dtok is None or not dtok.isdigit():
                    raise CoeffSyntaxError("expected a denominator", self.pos())
                den = int(self.take())
                if self.ring.kind != Q_KIND:
                    raise CoeffSyntaxError(f"fractions are not elements of {self.ring}", pos)
                if den == 0:
                    raise CoeffSyntaxError("zero denominator", pos)
                value = Fraction(n, den)
                return self.ring.element(-value if negative else value)
            if self.peek() == "*":
                self.take()
                return self.symbol_power(coefficient=-n if negative else n)
            return self.ring.from_int(-n if negative else n)
        if tok is not None and self.ring.kind == LAURENT_KIND and tok == self.ring.symbol:
            return self.symbol_power(coefficient=-1 if negative else 1)
        raise CoeffSyntaxError(f"expected a coefficient, found {tok!r}", self.pos())

    def symbol_power(self, coefficient: int) -> RingElement:
        pos = self.pos()
        tok = self.take()
        if self.ring.kind != LAURENT_KIND or tok != self.ring.symbol:
            raise CoeffSyntaxError(f"{tok!r} is not valid in {self.ring}", pos)
        exponent = 1
        if self.peek() == "^":
            self.take()
            exponent = self.signed_int()
        return self.ring.element({exponent: coefficient})


def parse_coeff(text: str, ring: Ring) -> RingElement:
    """Parse a standalone coefficient string in the given ring."""
    tokens = _tokenize_coeff(text)
    if not tokens:
        raise CoeffSyntaxError("empty coefficient", 0)
    return _CoeffParser(tokens, ring, len(text)).parse()
