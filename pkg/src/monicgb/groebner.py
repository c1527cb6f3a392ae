"""Verification of monic Groebner bases by the overlap termination criterion.

An LM-reduced monic set is a Groebner basis of the ideal it generates if
and only if every overlap element

    o(g_i, u; v, g_j) = g_i*u - v*g_j,   LM(g_i)*u == v*LM(g_j),

with proper flanks (len(u) < len(LM(g_j)), len(v) < len(LM(g_i))) reduces
to zero by monic division.  Trivial self-overlaps (u, v) = (1, 1) are
evaluated and recorded too, so reports enumerate every pair, including
g_i = g_j.

The check preprocesses with LM-interreduction (a relation whose leading
monomial contains another surviving relation's leading monomial is
redundant and dropped), enumerates overlaps in the fixed (i, j, len(v))
order, and reduces each overlap element with the deterministic division
strategy, so two runs on the same input produce identical reports.

Also here: membership certification on a verified basis, best-effort
completion by adjoining reduced overlap remainders while their leading
coefficients stay invertible, and coefficient base change along the
canonical ring maps.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .orders import MonomialOrder
from .polynomials import NcPoly, from_terms
from .presentation import Presentation
from .reduction import (NonMonicError, ReductionResult, Reducer,
                        validate_monic_set)
from .rings import (LAURENT_KIND, Q_KIND, Ring, RingElement, ZMOD_KIND,
                    Z_KIND, NonUnitError, format_coeff)
from .words import Word, find_subword, format_word, word_overlaps


class UncertifiedBasisError(ValueError):
    """Operation requires a relation set that passed check_gb."""


@dataclass(frozen=True)
class Overlap:
    i: int
    j: int
    u: Word
    v: Word

    @property
    def trivial(self) -> bool:
        return not self.u and not self.v

    def format(self, names: tuple[str, ...]) -> str:
        return (f"({self.i},{self.j},{format_word(self.u, names)},"
                f"{format_word(self.v, names)})")


@dataclass(frozen=True)
class OverlapRecord:
    overlap: Overlap
    element: NcPoly
    result: ReductionResult

    @property
    def reduced_to_zero(self) -> bool:
        return self.result.remainder.is_zero


@dataclass(frozen=True)
class GBReport:
    basis: tuple[NcPoly, ...]
    removed: tuple[int, ...]  # input positions dropped by LM-interreduction
    records: tuple[OverlapRecord, ...]
    verdict: bool

    @property
    def overlap_count(self) -> int:
        return len(self.records)

    @property
    def nontrivial_count(self) -> int:
        return sum(1 for r in self.records if not r.overlap.trivial)

    def failing_records(self) -> list[OverlapRecord]:
        return [r for r in self.records if not r.reduced_to_zero]

    def summary_line(self, names: tuple[str, ...]) -> str:
        if self.verdict:
            return (f"GROEBNER yes | overlaps {self.overlap_count}"
                    f" | nontrivial {self.nontrivial_count} | all reduced to 0")
        witness = self.failing_records()[0]
        return (f"GROEBNER no | witness overlap {witness.overlap.format(names)}"
                f" | remainder {witness.result.remainder.format(names)}")

    def kv_lines(self, names: tuple[str, ...]) -> list[str]:
        lines = [f"verdict {'yes' if self.verdict else 'no'}",
                 f"removed {' '.join(str(i) for i in self.removed) if self.removed else '-'}"]
        for rec in self.records:
            status = "zero" if rec.reduced_to_zero else "nonzero"
            lines.append(
                f"overlap {rec.overlap.format(names)}"
                f" | element {rec.element.format(names)}"
                f" | status {status}"
                f" | remainder {rec.result.remainder.format(names)}")
        return lines


def is_lm_reduced(relations: Sequence[NcPoly], order: MonomialOrder) -> bool:
    """No relation's LM is a subword of a different relation's LM."""
    validate_monic_set(relations)
    lms = [g.lm() for g in relations]
    for i, a in enumerate(lms):
        for j, b in enumerate(lms):
            if i != j and find_subword(a, b) >= 0:
                return False
    return True


def interreduce_lm(relations: Sequence[NcPoly],
                   order: MonomialOrder) -> tuple[list[NcPoly], list[int]]:
    """Drop every relation whose LM is divisible by another surviving
    relation's LM; on equal LMs the earlier list position survives.

    Returns (survivors, dropped input positions).
    """
    validate_monic_set(relations)
    lms = [g.lm() for g in relations]
    survives = []
    for i, a in enumerate(lms):
        doomed = False
        for j, b in enumerate(lms):
            if i == j:
                continue
            if find_subword(b, a) >= 0 and (b != a or j < i):
                doomed = True
                break
        if not doomed:
            survives.append(i)
    kept = [relations[i] for i in survives]
    dropped = [i for i in range(len(relations)) if i not in survives]
    return kept, dropped


def enumerate_overlaps(relations: Sequence[NcPoly],
                       order: MonomialOrder) -> list[Overlap]:
    """All overlaps over all ordered index pairs, sorted by (i, j, len(v))."""
    validate_monic_set(relations)
    lms = [g.lm() for g in relations]
    out = []
    for i, p in enumerate(lms):
        for j, q in enumerate(lms):
            for u, v in word_overlaps(p, q):
                out.append(Overlap(i, j, u, v))
    return out


def overlap_element(relations: Sequence[NcPoly], ov: Overlap) -> NcPoly:
    gi, gj = relations[ov.i], relations[ov.j]
    return gi.wordmul((), ov.u) - gj.wordmul(ov.v, ())


def check_gb(relations: Sequence[NcPoly], order: MonomialOrder,
             threads: int = 1) -> GBReport:
    """Run the termination criterion; the verdict is True iff every overlap
    element reduces to zero.  Failing remainders are kept as witnesses."""
    basis, removed = interreduce_lm(relations, order)
    overlaps = enumerate_overlaps(basis, order)
    reducer = Reducer(basis, order)
    elements = [overlap_element(basis, ov) for ov in overlaps]
    if threads > 1 and elements:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(reducer.divide, elements))
    else:
        results = [reducer.divide(e) for e in elements]
    records = tuple(OverlapRecord(ov, el, res)
                    for ov, el, res in zip(overlaps, elements, results))
    verdict = all(r.reduced_to_zero for r in records)
    return GBReport(tuple(basis), tuple(removed), records, verdict)


def membership(f: NcPoly, relations: Sequence[NcPoly], order: MonomialOrder,
               report: GBReport | None = None) -> tuple[bool, ReductionResult]:
    """Ideal membership on a certified basis: member iff the normal form is
    zero, with the division trace as witness (a Groebner representation
    when the answer is yes)."""
    if report is None:
        report = check_gb(relations, order)
    elif tuple(report.basis) != tuple(interreduce_lm(relations, order)[0]):
        raise UncertifiedBasisError("report does not certify this relation set")
    if not report.verdict:
        raise UncertifiedBasisError(
            "relations are not a certified Groebner basis; run check_gb first")
    result = Reducer(list(report.basis), order).divide(f)
    return result.remainder.is_zero, result


def monicize(relations: Sequence[NcPoly]) -> list[NcPoly]:
    """Scale each relation by the inverse of its leading coefficient."""
    out = []
    for i, g in enumerate(relations):
        if g.is_zero:
            raise ValueError(f"relation #{i} is zero")
        lc = g.lc()
        if lc == g.ring.one:
            out.append(g)
            continue
        if not lc.is_unit():
            raise NonUnitError(
                f"relation #{i} has non-unit leading coefficient {format_coeff(lc)}")
        out.append(g.scale(lc.inverse()))
    return out


@dataclass(frozen=True)
class CompletionResult:
    status: str  # "completed" | "aborted_nonunit" | "aborted_limit"
    relations: tuple[NcPoly, ...]
    rounds: int
    report: GBReport | None = None
    offending: NcPoly | None = None

    @property
    def completed(self) -> bool:
        return self.status == "completed"


def try_complete(relations: Sequence[NcPoly], order: MonomialOrder,
                 max_rounds: int = 8, max_degree: int = 24) -> CompletionResult:
    """Best-effort completion: adjoin monicized overlap remainders until all
    overlaps reduce to zero.  Aborts when a remainder has a non-unit leading
    coefficient (no criterion applies then) or when limits are exceeded.

    Degrees are measured by the order's weights for graded orders and by
    word length otherwise.
    """
    current = list(relations)
    for round_no in range(max_rounds + 1):
        report = check_gb(current, order)
        if report.verdict:
            return CompletionResult("completed", tuple(report.basis), round_no, report)
        if round_no == max_rounds:
            return CompletionResult("aborted_limit", tuple(report.basis), round_no, report)
        additions: list[NcPoly] = []
        seen: set[NcPoly] = set()
        for rec in report.failing_records():
            r = rec.result.remainder
            lc = r.lc()
            if not lc.is_unit():
                return CompletionResult("aborted_nonunit", tuple(report.basis),
                                        round_no, report, offending=r)
            r = r.scale(lc.inverse())
            deg = r.degree(order.weights) if order.graded else len(r.lm())
            if deg > max_degree:
                return CompletionResult("aborted_limit", tuple(report.basis),
                                        round_no, report, offending=r)
            if r not in seen:
                seen.add(r)
                additions.append(r)
        current = list(report.basis) + additions
    raise AssertionError("unreachable")


_CANONICAL_SOURCES = {Z_KIND: "any", Q_KIND: "same", ZMOD_KIND: "same",
                      LAURENT_KIND: "specialize"}


def map_coeff(c: RingElement, target: Ring,
              q_value: RingElement | None = None) -> RingElement:
    """Image of c along the canonical map into target.

    Integers map into every ring (reduction into Z/n, inclusion into Q,
    constants into Laurent rings); otherwise the rings must agree, except a
    Laurent coefficient may be specialized by substituting a designated
    unit q_value of the target for the symbol.
    """
    src = c.ring
    if src == target:
        return c
    if src.kind == Z_KIND:
        return target.from_int(c.value)
    if src.kind == LAURENT_KIND:
        if q_value is None:
            raise ValueError(
                f"specializing {src} into {target} needs a designated unit value for "
                f"{src.symbol}")
        q_value = target.element(q_value)
        if not q_value.is_unit():
            raise NonUnitError(
                f"designated value {format_coeff(q_value)} is not a unit in {target}")
        total = target.zero
        for e, coef in c.value:
            total = total + (q_value ** e) * target.from_int(coef)
        return total
    raise ValueError(f"no canonical coefficient map from {src} to {target}")


def base_change(pres: Presentation, target: Ring,
                q_value: RingElement | None = None) -> Presentation:
    """Transport a presentation along a coefficient ring map.

    Variables, weights and the monomial order are kept.  Every mapped
    relation must stay monic with the same leading monomial; a vanishing or
    non-unit image of a leading coefficient is an error, and so is a
    relation collapsing to zero.
    """
    new_relations = []
    for idx, rel in enumerate(pres.relations):
        old_lm = rel.lm()
        mapped = from_terms(target, pres.order,
                            [(map_coeff(c, target, q_value), w) for c, w in rel.terms])
        if mapped.is_zero:
            raise ValueError(f"relation #{idx} maps to zero in {target}")
        if mapped.lm() != old_lm:
            raise ValueError(
                f"relation #{idx} changes leading monomial under the map to {target}")
        if not mapped.is_monic():
            raise NonMonicError(idx, mapped.lc())
        new_relations.append(mapped)
    return Presentation(target, pres.variables, pres.weights, pres.order,
                        tuple(new_relations))
