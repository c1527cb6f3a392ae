"""Words of the free monoid on the declared variables.

A word is a tuple of 0-based variable indices; the empty tuple is the
identity monomial 1.  Besides concatenation and weighted degree this module
provides the two searches everything else is built on: subword occurrences
(two-sided divisibility) and the word overlaps that generate overlap
elements.
"""

from __future__ import annotations

Word = tuple[int, ...]

EMPTY: Word = ()


def concat(*parts: Word) -> Word:
    out: Word = ()
    for p in parts:
        out = out + tuple(p)
    return out


def degree(w: Word, weights: tuple[int, ...]) -> int:
    """Sum of letter weights; degree of the empty word is 0."""
    total = 0
    for a in w:
        if not 0 <= a < len(weights):
            raise IndexError(f"letter index {a} out of range for {len(weights)} weights")
        total += weights[a]
    return total


def find_subword(pattern: Word, w: Word) -> int:
    """Index of the leftmost occurrence of pattern in w, or -1."""
    if not pattern:
        raise ValueError("empty pattern is not a valid divisor")
    n, m = len(w), len(pattern)
    first = pattern[0]
    for i in range(n - m + 1):
        if w[i] == first and w[i:i + m] == pattern:
            return i
    return -1


def is_subword(pattern: Word, w: Word) -> bool:
    return find_subword(pattern, w) >= 0


def subword_occurrences(pattern: Word, w: Word) -> list[tuple[Word, Word]]:
    """All splits w = left + pattern + right, by increasing len(left).

    Overlapping occurrences are all reported.  An empty list means the
    pattern does not divide w.
    """
    if not pattern:
        raise ValueError("empty pattern is not a valid divisor")
    out = []
    m = len(pattern)
    for i in range(len(w) - m + 1):
        if w[i:i + m] == pattern:
            out.append((w[:i], w[i + m:]))
    return out


def word_overlaps(p: Word, q: Word) -> list[tuple[Word, Word]]:
    """All pairs (u, v) with p+u == v+q, len(u) < len(q), len(v) < len(p).

    Ordered by increasing len(v).  The trivial pair ((), ()) appears exactly
    when p == q; every other pair matches a proper suffix of p to a proper
    prefix of q, or embeds q strictly inside p.
    """
    if not p or not q:
        raise ValueError("overlaps are defined for nonempty words only")
    out = []
    for k in range(max(0, len(p) - len(q)), len(p)):
        m = len(p) - k
        if p[k:] == q[:m]:
            out.append((q[m:], p[:k]))
    return out


def format_word(w: Word, names: tuple[str, ...]) -> str:
    """Text form with powers: () -> "1", (0, 0, 1) -> "X1^2*X2"."""
    if not w:
        return "1"
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name = names[w[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)
