"""Division by a monic relation set.

Because every divisor has leading coefficient 1, the division step
subtracts the whole current leading term times a sandwiched relation and
never inverts a coefficient, so the algorithm is valid over any of the
supported rings.  The strategy is fixed and documented: scan the relation
list in declared order, take the first relation whose leading monomial
divides the current leading monomial, and use its leftmost occurrence.
Successive working leading monomials strictly decrease, so the loop
terminates because the ordering is a well-ordering.

The result carries the remainder together with a trace whose steps
reconstruct the input exactly:

    f = sum(coeff * left * G[index] * right) + remainder
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .orders import MonomialOrder
from .polynomials import NcPoly, Term, from_terms, zero
from .rings import RingElement, RingMismatchError, format_coeff
from .words import Word, find_subword, format_word, is_subword


class NonMonicError(ValueError):
    """A relation has leading coefficient != 1."""

    def __init__(self, index: int, coeff: RingElement):
        super().__init__(
            f"relation #{index} has leading coefficient {format_coeff(coeff)}, not 1; "
            f"unit leading coefficients can be normalized with monicize() first")
        self.index = index
        self.coeff = coeff


class UnitRelationError(ValueError):
    """A relation has leading monomial 1, collapsing the quotient."""

    def __init__(self, index: int):
        super().__init__(f"relation #{index} has leading monomial 1")
        self.index = index


class TraceStep(NamedTuple):
    coeff: RingElement
    left: Word
    index: int
    right: Word

    def format(self, names: tuple[str, ...]) -> str:
        return (f"{format_coeff(self.coeff)} | {format_word(self.left, names)}"
                f" | rel#{self.index} | {format_word(self.right, names)}")


@dataclass(frozen=True)
class ReductionResult:
    remainder: NcPoly
    steps: tuple[TraceStep, ...]

    @property
    def is_zero(self) -> bool:
        return self.remainder.is_zero


def validate_monic_set(relations: Sequence[NcPoly]) -> None:
    for i, g in enumerate(relations):
        if g.is_zero:
            raise ValueError(f"relation #{i} is zero")
        if not g.lm():
            raise UnitRelationError(i)
        if not g.is_monic():
            raise NonMonicError(i, g.lc())


class Reducer:
    """Division engine for a fixed monic relation list.

    Validates the relation set once; divide() can then be called many times
    (overlap checking, completion, membership) without re-checking.
    """

    def __init__(self, relations: Sequence[NcPoly], order: MonomialOrder):
        relations = list(relations)
        validate_monic_set(relations)
        for i, g in enumerate(relations):
            if g.order != order:
                raise ValueError(f"relation #{i} does not carry the declared order")
        if len({g.ring for g in relations}) > 1:
            raise RingMismatchError("relations live in different rings")
        self.relations = relations
        self.order = order
        self._lms = [g.lm() for g in relations]

    def _check_input(self, f: NcPoly) -> None:
        if self.relations and f.ring != self.relations[0].ring:
            raise RingMismatchError(
                f"polynomial ring {f.ring} differs from relation ring {self.relations[0].ring}")
        if f.order != self.order:
            raise ValueError("polynomial does not carry the declared order")

    def divide(self, f: NcPoly) -> ReductionResult:
        self._check_input(f)
        h = f
        steps: list[TraceStep] = []
        remainder_terms: list[Term] = []
        lms = self._lms
        while h:
            coeff, w = h.lt()
            hit = -1
            pos = -1
            for idx, lm in enumerate(lms):
                p = find_subword(lm, w)
                if p >= 0:
                    hit, pos = idx, p
                    break
            if hit < 0:
                # leading term is normal; it moves to the remainder and the
                # working polynomial strictly drops
                remainder_terms.append(Term(coeff, w))
                h = NcPoly(h.ring, h.order, h.terms[1:])
                continue
            g = self.relations[hit]
            left = w[:pos]
            right = w[pos + len(lms[hit]):]
            steps.append(TraceStep(coeff, left, hit, right))
            h = h - g.wordmul(left, right).scale(coeff)
        remainder = NcPoly(f.ring, f.order, tuple(remainder_terms))
        return ReductionResult(remainder, tuple(steps))

    def normal_form(self, f: NcPoly) -> NcPoly:
        return self.divide(f).remainder

    def reduces_to_zero(self, f: NcPoly) -> bool:
        return self.divide(f).remainder.is_zero

    def is_normal(self, f: NcPoly) -> bool:
        return all(not is_subword(lm, w) for _, w in f.terms for lm in self._lms)


def divide(f: NcPoly, relations: Sequence[NcPoly], order: MonomialOrder) -> ReductionResult:
    return Reducer(relations, order).divide(f)


def normal_form(f: NcPoly, relations: Sequence[NcPoly], order: MonomialOrder) -> NcPoly:
    return Reducer(relations, order).normal_form(f)


def reduces_to_zero(f: NcPoly, relations: Sequence[NcPoly], order: MonomialOrder) -> bool:
    return Reducer(relations, order).reduces_to_zero(f)


def is_normal(f: NcPoly, relations: Sequence[NcPoly]) -> bool:
    """True iff no word of f contains any relation's leading monomial."""
    validate_monic_set(relations)
    lms = [g.lm() for g in relations]
    return all(not is_subword(lm, w) for _, w in f.terms for lm in lms)


def reconstruct(result: ReductionResult, relations: Sequence[NcPoly],
                ring, order: MonomialOrder) -> NcPoly:
    """Rebuild the dividend from a trace: sum of step contributions plus
    the remainder.  Used by tests and by certificate verification."""
    total = zero(ring, order)
    for coeff, left, idx, right in result.steps:
        total = total + relations[idx].wordmul(left, right).scale(coeff)
    return total + result.remainder
