"""Monomial orderings on words.

Two families are provided: the weighted graded lexicographic ordering, and
the lexicographic extension of a commutative lexicographic ordering through
abelianization.  Plain word-lexicographic comparison is not a monomial
ordering on the free monoid (it admits infinite descending chains), so it
appears only as the tie-breaker inside the two families, where ties are
confined to finite sets.

Both orderings are total, multiplicative (u < v implies wus < wvs) and
well-founded, with the empty word as unique minimum.  compare() returns
-1, 0 or 1; key() returns a sort key realizing the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .words import Word, degree

LESS, EQUAL, GREATER = -1, 0, 1


def abelianize(w: Word, nvars: int) -> tuple[int, ...]:
    """Exponent vector counting letter multiplicities."""
    counts = [0] * nvars
    for a in w:
        counts[a] += 1
    return tuple(counts)


def _validate_precedence(precedence: tuple[int, ...], what: str) -> None:
    if sorted(precedence) != list(range(len(precedence))):
        raise ValueError(f"{what} must be a permutation of 0..n-1, got {precedence}")


def _rank_of(precedence: tuple[int, ...]) -> tuple[int, ...]:
    rank = [0] * len(precedence)
    for r, v in enumerate(precedence):
        rank[v] = r
    return tuple(rank)


@dataclass(frozen=True)
class GradedLexOrder:
    """Weighted degree first; ties by the first differing letter, where a
    higher-precedence letter makes the larger word.

    precedence lists variable indices in ascending precedence, matching the
    file syntax "order grlex X2 < X1 < X3".
    """

    precedence: tuple[int, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        _validate_precedence(self.precedence, "grlex precedence")
        if len(self.weights) != len(self.precedence):
            raise ValueError("weights and precedence disagree on variable count")
        if any(w < 1 for w in self.weights):
            raise ValueError("weights must be positive")

    @property
    def graded(self) -> bool:
        return True

    @property
    def nvars(self) -> int:
        return len(self.precedence)

    @property
    def letter_precedence(self) -> tuple[int, ...]:
        return self.precedence

    @cached_property
    def _rank(self) -> tuple[int, ...]:
        return _rank_of(self.precedence)

    def key(self, w: Word):
        rank = self._rank
        return (degree(w, self.weights), tuple(rank[a] for a in w))

    def compare(self, a: Word, b: Word) -> int:
        ka, kb = self.key(a), self.key(b)
        return LESS if ka < kb else GREATER if ka > kb else EQUAL


@dataclass(frozen=True)
class EtLexOrder:
    """Lexicographic extension: abelianized exponent vectors are compared by
    commutative lex (exponent of the highest-precedence variable decides
    first), equal vectors by word-lex under the tie precedence.
    """

    commutative_precedence: tuple[int, ...]
    tie_precedence: tuple[int, ...]

    def __post_init__(self):
        _validate_precedence(self.commutative_precedence, "commutative precedence")
        _validate_precedence(self.tie_precedence, "tie precedence")
        if len(self.commutative_precedence) != len(self.tie_precedence):
            raise ValueError("precedences disagree on variable count")

    @property
    def graded(self) -> bool:
        return False

    @property
    def nvars(self) -> int:
        return len(self.commutative_precedence)

    @property
    def letter_precedence(self) -> tuple[int, ...]:
        return self.tie_precedence

    @cached_property
    def _tie_rank(self) -> tuple[int, ...]:
        return _rank_of(self.tie_precedence)

    @cached_property
    def _commutative_order(self) -> tuple[int, ...]:
        # highest precedence first, so tuple comparison is commutative lex
        return tuple(reversed(self.commutative_precedence))

    def key(self, w: Word):
        exps = abelianize(w, self.nvars)
        rank = self._tie_rank
        return (tuple(exps[v] for v in self._commutative_order),
                tuple(rank[a] for a in w))

    def compare(self, a: Word, b: Word) -> int:
        ka, kb = self.key(a), self.key(b)
        return LESS if ka < kb else GREATER if ka > kb else EQUAL


MonomialOrder = GradedLexOrder | EtLexOrder


def natural_grlex(nvars: int, weights: tuple[int, ...] | None = None) -> GradedLexOrder:
    """Graded lex with the declaration order as ascending precedence."""
    if weights is None:
        weights = (1,) * nvars
    return GradedLexOrder(tuple(range(nvars)), tuple(weights))
