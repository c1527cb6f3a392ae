"""Normal words and PBW structure.

The normal words of a relation set are the words containing no relation's
leading monomial as a subword; when the set is a certified Groebner basis
they project to a free basis of the quotient.  This module enumerates them
under a degree or length bound, counts them per degree with a
forbidden-subword automaton (a transfer-matrix computation the enumeration
cross-checks in tests), decides the ordered-product PBW shape, and verifies
the direct-sum decomposition

    span(words up to degree d) = span(u*g*v) (+) span(normal words)

by independent row reduction over a field.
"""

from __future__ import annotations

from dataclasses import dataclass

from .groebner import GBReport, check_gb
from .linalg import RowSpan, require_field
from .orders import MonomialOrder
from .polynomials import NcPoly
from .presentation import Presentation
from .rings import RingElement
from .words import Word, degree as word_degree

Bound = tuple[str, int]  # ("degree", d) with weights, or ("length", L)


def _validate_patterns(patterns: list[Word]) -> None:
    for p in patterns:
        if not p:
            raise ValueError("empty word cannot be a forbidden pattern")


def _ends_with_pattern(w: Word, patterns: list[Word]) -> bool:
    return any(len(w) >= len(p) and w[len(w) - len(p):] == p for p in patterns)


def normal_words(patterns: list[Word], order: MonomialOrder, *,
                 max_degree: int | None = None,
                 weights: tuple[int, ...] | None = None,
                 max_length: int | None = None) -> list[Word]:
    """All words within the bound avoiding every pattern, ascending in the
    given order.

    Exactly one of max_degree (with weights) or max_length must be given.
    Enumeration grows words letter by letter; because normality is closed
    under subwords, only the trailing letters need checking at each step.
    """
    patterns = [tuple(p) for p in patterns]
    _validate_patterns(patterns)
    if (max_degree is None) == (max_length is None):
        raise ValueError("specify exactly one of max_degree or max_length")
    if max_degree is not None and weights is None:
        raise ValueError("a degree bound needs weights")
    nvars = order.nvars

    def within(w: Word) -> bool:
        if max_length is not None:
            return len(w) <= max_length
        return word_degree(w, weights) <= max_degree

    found: list[Word] = []
    frontier: list[Word] = [()]
    while frontier:
        found.extend(frontier)
        nxt = []
        for w in frontier:
            for a in range(nvars):
                cand = w + (a,)
                if within(cand) and not _ends_with_pattern(cand, patterns):
                    nxt.append(cand)
        frontier = nxt
    found.sort(key=order.key)
    return found


class _PatternAutomaton:
    """Aho-Corasick automaton over the forbidden patterns; states are the
    proper prefixes of patterns plus a dead state absorbing every match."""

    DEAD = -1

    def __init__(self, patterns: list[Word], nvars: int):
        _validate_patterns(patterns)
        self.nvars = nvars
        # trie over pattern prefixes
        children: list[dict[int, int]] = [{}]
        terminal: list[bool] = [False]
        for p in patterns:
            s = 0
            for a in p:
                if a not in children[s]:
                    children.append({})
                    terminal.append(False)
                    children[s][a] = len(children) - 1
                s = children[s][a]
            terminal[s] = True
        # breadth-first failure links; a state is dead when some suffix of
        # its prefix is a full pattern
        fail = [0] * len(children)
        queue = list(children[0].values())
        while queue:
            s = queue.pop(0)
            terminal[s] = terminal[s] or terminal[fail[s]]
            for a, t in children[s].items():
                f = fail[s]
                while f and a not in children[f]:
                    f = fail[f]
                fail[t] = children[f].get(a, 0)
                queue.append(t)
        # dense transitions, with matches collapsed into the dead state
        self.delta = [[0] * nvars for _ in children]
        for s in range(len(children)):
            for a in range(nvars):
                f = s
                while f and a not in children[f]:
                    f = fail[f]
                t = children[f].get(a, 0)
                self.delta[s][a] = self.DEAD if terminal[t] else t
        self.size = len(children)


def count_normal_words(patterns: list[Word], weights: tuple[int, ...],
                       degree: int) -> int:
    """Number of normal words of weighted degree exactly equal to degree,
    by dynamic programming over the pattern automaton."""
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    patterns = [tuple(p) for p in patterns]
    nvars = len(weights)
    auto = _PatternAutomaton(patterns, nvars) if patterns else None
    size = auto.size if auto else 1
    counts = [[0] * size for _ in range(degree + 1)]
    counts[0][0] = 1
    for d in range(degree + 1):
        row = counts[d]
        for s in range(size):
            c = row[s]
            if not c:
                continue
            for a in range(nvars):
                nd = d + weights[a]
                if nd > degree:
                    continue
                t = auto.delta[s][a] if auto else 0
                if t == _PatternAutomaton.DEAD:
                    continue
                counts[nd][t] += c
    return sum(counts[degree])


@dataclass(frozen=True)
class PbwVerdict:
    shape_ok: bool
    gb_ok: bool
    basis_variables: tuple[str, ...]  # ascending letter precedence
    missing_pairs: tuple[tuple[str, str], ...]
    report: GBReport

    @property
    def pbw(self) -> bool:
        return self.shape_ok and self.gb_ok

    def basis_description(self) -> str:
        return "*".join(f"{name}^a{k + 1}"
                        for k, name in enumerate(self.basis_variables))


def pbw_verdict(pres: Presentation, threads: int = 1) -> PbwVerdict:
    """Ordered-product basis test: the shape holds when every variable pair
    contributes a relation whose LM is (higher precedence)*(lower
    precedence); combined with a Groebner certificate this is equivalent to
    the images of the ordered monomials forming a free basis.

    The ordering's tie-breaking letter precedence is what decides which of
    the two pair products can lead, so the shape is checked against it and
    the basis lists the variables in ascending precedence.
    """
    order = pres.order
    prec = order.letter_precedence
    lms = {g.lm() for g in pres.relations if not g.is_zero}
    missing = []
    for lo_rank in range(len(prec)):
        for hi_rank in range(lo_rank + 1, len(prec)):
            lo, hi = prec[lo_rank], prec[hi_rank]
            if (hi, lo) not in lms:
                missing.append((pres.variables[hi], pres.variables[lo]))
    report = check_gb(list(pres.relations), order, threads=threads)
    basis_vars = tuple(pres.variables[v] for v in prec)
    return PbwVerdict(not missing, report.verdict, basis_vars,
                      tuple(missing), report)


@dataclass(frozen=True)
class DecompositionReport:
    degree_bound: int
    total_words: int
    normal_count: int
    span_rank: int
    combined_rank: int

    @property
    def ok(self) -> bool:
        return (self.span_rank + self.normal_count == self.total_words
                and self.combined_rank == self.total_words)


def words_up_to_degree(nvars: int, weights: tuple[int, ...], bound: int) -> list[Word]:
    out: list[Word] = []
    frontier: list[Word] = [()]
    while frontier:
        out.extend(frontier)
        nxt = []
        for w in frontier:
            d = word_degree(w, weights)
            for a in range(nvars):
                if d + weights[a] <= bound:
                    nxt.append(w + (a,))
        frontier = nxt
    return out


def decomposition_oracle(pres: Presentation, degree_bound: int,
                         report: GBReport | None = None) -> DecompositionReport:
    """Brute-force check of the free-basis decomposition up to a degree.

    Under a graded order the part of the ideal of degree <= d is spanned by
    the products u*g*v of degree <= d, so the following must hold in the
    span of all words of degree <= d over a field:

        rank{u*g*v} + #normal words == #words,  and the two spans meet
        trivially (their union has full rank).
    """
    require_field(pres.ring)
    if not pres.order.graded:
        raise ValueError("the decomposition oracle needs a graded monomial order")
    if report is None:
        report = check_gb(list(pres.relations), pres.order)
    if not report.verdict:
        raise ValueError("relations are not a certified Groebner basis")

    weights = pres.weights
    words = words_up_to_degree(pres.nvars, weights, degree_bound)
    index = {w: k for k, w in enumerate(words)}
    width = len(words)
    zero = pres.ring.zero

    def vector(p: NcPoly) -> list[RingElement]:
        vec = [zero] * width
        for c, w in p.terms:
            vec[index[w]] = c
        return vec

    span = RowSpan(pres.ring, width)
    for g in report.basis:
        g_deg = g.degree(weights)
        room = degree_bound - g_deg
        if room < 0:
            continue
        sides = words_up_to_degree(pres.nvars, weights, room)
        for u in sides:
            du = word_degree(u, weights)
            for v in sides:
                if du + word_degree(v, weights) <= room:
                    span.add(vector(g.wordmul(u, v)))
    span_rank = span.rank

    patterns = [g.lm() for g in report.basis]
    normals = normal_words(patterns, pres.order,
                           max_degree=degree_bound, weights=weights)
    combined = span
    for w in normals:
        vec = [zero] * width
        vec[index[w]] = pres.ring.one
        combined.add(vec)
    return DecompositionReport(degree_bound, width, len(normals),
                               span_rank, combined.rank)
