"""Noncommutative polynomials in canonical form.

A polynomial is a tuple of (coefficient, word) terms kept strictly
descending under its governing monomial ordering, with no zero coefficients
and no repeated words; the empty tuple is the zero polynomial.  Leading
data (LM, LC, LT) is only defined for nonzero polynomials, and the two
leading-homogeneous extractions live here as well: the sum of all terms of
maximal weighted degree, and the single leading term.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .orders import MonomialOrder
from .rings import Ring, RingElement, RingMismatchError
from .words import Word, concat, degree, format_word


class OrderMismatchError(ValueError):
    """Operands of a polynomial operation carry different monomial orders."""


class ZeroPolynomialError(ValueError):
    """Leading data requested from the zero polynomial."""


class Term(NamedTuple):
    coeff: RingElement
    word: Word


@dataclass(frozen=True)
class NcPoly:
    ring: Ring
    order: MonomialOrder
    terms: tuple[Term, ...]

    def _check(self, other: NcPoly) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"mixed rings {self.ring} and {other.ring}")
        if self.order != other.order:
            raise OrderMismatchError("mixed monomial orders")

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def lt(self) -> Term:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading term")
        return self.terms[0]

    def lm(self) -> Word:
        return self.lt().word

    def lc(self) -> RingElement:
        return self.lt().coeff

    def is_monic(self) -> bool:
        return bool(self.terms) and self.terms[0].coeff == self.ring.one

    def words(self) -> list[Word]:
        return [t.word for t in self.terms]

    def coeff_of(self, w: Word) -> RingElement:
        for c, word in self.terms:
            if word == w:
                return c
        return self.ring.zero

    def __add__(self, other: NcPoly) -> NcPoly:
        self._check(other)
        return from_terms(self.ring, self.order, list(self.terms) + list(other.terms))

    def __sub__(self, other: NcPoly) -> NcPoly:
        return self + (-other)

    def __neg__(self) -> NcPoly:
        return NcPoly(self.ring, self.order, tuple(Term(-c, w) for c, w in self.terms))

    def __mul__(self, other: NcPoly) -> NcPoly:
        self._check(other)
        acc: dict[Word, RingElement] = {}
        for ca, wa in self.terms:
            for cb, wb in other.terms:
                w = wa + wb
                c = ca * cb
                prev = acc.get(w)
                acc[w] = c if prev is None else prev + c
        return _from_dict(self.ring, self.order, acc)

    def scale(self, c: RingElement) -> NcPoly:
        c = self.ring.element(c)
        if not c:
            return zero(self.ring, self.order)
        terms = []
        for coeff, w in self.terms:
            prod = c * coeff
            if prod:
                terms.append(Term(prod, w))
        # scaling by a zero divisor can kill or reorder nothing: words keep
        # their relative order, only vanishing terms drop out
        return NcPoly(self.ring, self.order, tuple(terms))

    def wordmul(self, left: Word, right: Word) -> NcPoly:
        """The sandwich product left * self * right."""
        if not left and not right:
            return self
        return NcPoly(self.ring, self.order,
                      tuple(Term(c, concat(left, w, right)) for c, w in self.terms))

    def degree(self, weights: tuple[int, ...]) -> int:
        """Maximal weighted degree over the support; zero polynomial rejected."""
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no degree")
        return max(degree(w, weights) for _, w in self.terms)

    def lh_n(self, weights: tuple[int, ...]) -> NcPoly:
        """Sum of all terms of maximal weighted degree."""
        top = self.degree(weights)
        keep = tuple(t for t in self.terms if degree(t.word, weights) == top)
        return NcPoly(self.ring, self.order, keep)

    def lh_b(self) -> Term:
        """The single leading term, as a Term."""
        return self.lt()

    def format(self, names: tuple[str, ...]) -> str:
        from .rings import format_coeff, is_negative
        if not self.terms:
            return "0"
        pieces = []
        for i, (c, w) in enumerate(self.terms):
            neg = is_negative(c)
            mag = -c if neg else c
            if not w:
                body = format_coeff(mag)
            elif mag == self.ring.one:
                body = format_word(w, names)
            else:
                body = f"{format_coeff(mag)}*{format_word(w, names)}"
            if i == 0:
                pieces.append(("-" if neg else "") + body)
            else:
                pieces.append((" - " if neg else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        names = tuple(f"x{i}" for i in range(_order_nvars(self.order)))
        return f"<NcPoly {self.format(names)}>"


def _order_nvars(order: MonomialOrder) -> int:
    return order.nvars


def _from_dict(ring: Ring, order: MonomialOrder, acc: dict[Word, RingElement]) -> NcPoly:
    items = [(order.key(w), w, c) for w, c in acc.items() if c]
    items.sort(key=lambda kv: kv[0], reverse=True)
    return NcPoly(ring, order, tuple(Term(c, w) for _, w, c in items))


def from_terms(ring: Ring, order: MonomialOrder,
               terms: Iterable[tuple[RingElement, Word] | Term]) -> NcPoly:
    """Merge, sort and prune raw (coefficient, word) pairs into canonical form."""
    acc: dict[Word, RingElement] = {}
    for coeff, word in terms:
        coeff = ring.element(coeff)
        word = tuple(word)
        prev = acc.get(word)
        acc[word] = coeff if prev is None else prev + coeff
    return _from_dict(ring, order, acc)


def normalize(terms: Iterable[tuple[RingElement, Word]], ring: Ring,
              order: MonomialOrder) -> NcPoly:
    return from_terms(ring, order, terms)


def zero(ring: Ring, order: MonomialOrder) -> NcPoly:
    return NcPoly(ring, order, ())


def one(ring: Ring, order: MonomialOrder) -> NcPoly:
    return NcPoly(ring, order, (Term(ring.one, ()),))


def monomial(ring: Ring, order: MonomialOrder, word: Word,
             coeff: RingElement | int = 1) -> NcPoly:
    c = ring.element(coeff)
    if not c:
        return zero(ring, order)
    return NcPoly(ring, order, (Term(c, tuple(word)),))
