"""Exact sparse linear algebra over Q.

Vectors are dicts key -> Fraction with zeros omitted.  Keys only need to be
hashable and orderable; the echelon basis pivots on the smallest key.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping


class Echelon:
    """Incrementally maintained echelon basis of a span of sparse vectors."""

    def __init__(self) -> None:
        self.pivots: dict[Hashable, dict] = {}

    def reduce(self, vec: Mapping) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        while v:
            k = min(v)
            p = self.pivots.get(k)
            if p is None:
                return v
            f = v[k] / p[k]
            for kk, c in p.items():
                s = v.get(kk, 0) - f * c
                if s:
                    v[kk] = s
                else:
                    v.pop(kk, None)
        return v

    def add(self, vec: Mapping) -> bool:
        """Insert vec; True when it was independent of the current span."""
        v = self.reduce(vec)
        if not v:
            return False
        self.pivots[min(v)] = v
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def rank(vectors: Iterable[Mapping]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def nullspace(rows: list[list], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : rows @ x = 0} via reduced row echelon form (dense)."""
    m = [[Fraction(x) for x in r] for r in rows]
    pivcols = []
    r = 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for k in range(len(m)):
            if k != r and m[k][c]:
                f = m[k][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        pivcols.append(c)
        r += 1
        if r == len(m):
            break
    free = [c for c in range(ncols) if c not in set(pivcols)]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for row, pc in enumerate(pivcols):
            x[pc] = -m[row][fc]
        basis.append(x)
    return basis
