"""Exact Gaussian elimination over field coefficient rings (Q, or Z/p with
p prime).  Small and dense on purpose: the verification oracles work in the
finite-dimensional span of bounded-degree words, where a few hundred rows
is the realistic ceiling."""

from __future__ import annotations

from typing import Sequence

from .rings import Q_KIND, Ring, RingElement, ZMOD_KIND


def is_field(ring: Ring) -> bool:
    if ring.kind == Q_KIND:
        return True
    if ring.kind == ZMOD_KIND:
        n = ring.modulus
        if n < 2:
            return False
        d = 2
        while d * d <= n:
            if n % d == 0:
                return False
            d += 1
        return True
    return False


def require_field(ring: Ring) -> None:
    if not is_field(ring):
        raise ValueError(f"{ring} is not a supported field (use Q or Zmod p, p prime)")


class RowSpan:
    """Incrementally row-reduced span of vectors over a field."""

    def __init__(self, ring: Ring, width: int):
        require_field(ring)
        self.ring = ring
        self.width = width
        self.rows: list[list[RingElement]] = []
        self.pivots: list[int] = []  # pivot column of each stored row

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _eliminate(self, vec: list[RingElement]) -> list[RingElement]:
        for row, piv in zip(self.rows, self.pivots):
            c = vec[piv]
            if c:
                for k in range(piv, self.width):
                    vec[k] = vec[k] - c * row[k]
        return vec

    def add(self, vec: Sequence[RingElement]) -> bool:
        """Reduce vec against the span; absorb it if independent.

        Returns True when the rank grew.
        """
        vec = self._eliminate(list(vec))
        piv = next((k for k, c in enumerate(vec) if c), -1)
        if piv < 0:
            return False
        inv = vec[piv].inverse()
        vec = [c * inv for c in vec]
        for row in self.rows:
            c = row[piv]
            if c:
                for k in range(piv, self.width):
                    row[k] = row[k] - c * vec[k]
        self.rows.append(vec)
        self.pivots.append(piv)
        return True

    def contains(self, vec: Sequence[RingElement]) -> bool:
        return all(not c for c in self._eliminate(list(vec)))
