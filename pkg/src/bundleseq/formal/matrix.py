"""Transition matrices of bundles on the formal neighborhood of D.

Charts: chart 0 with coordinates (z, u), chart 1 with (zeta, v), glued by
zeta = 1/z, v = z*u; D = {u = 0} = {v = 0}.  A rank-r bundle is given by an
r x r matrix T of overlap functions with s1 = T s0 for local sections s0 on
chart 0 and s1 on chart 1.  The 1 x 1 matrix (z^k) is O_U(kD); it restricts
to O_D(-k) on D.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from bundleseq.formal import laurent as lp
from bundleseq.formal.series import TruncatedBivariate


class SingularTransition(ValueError):
    """Determinant is not a unit times a power of z."""


class TruncationExceeded(ValueError):
    """A computation needs more u-orders than the data carries."""


TB = TruncatedBivariate


def _det(rows: list[list[TB]], N: int) -> TB:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = TB.zero(N)
    for c in range(n):
        if not rows[0][c]:
            continue
        minor = [r[:c] + r[c + 1:] for r in rows[1:]]
        term = rows[0][c] * _det(minor, N)
        total = total + term if c % 2 == 0 else total - term
    return total


class TransitionMatrix:
    __slots__ = ("rows", "N")

    def __init__(self, rows: Sequence[Sequence[TB]], N: int | None = None, check: bool = True):
        rows = [list(r) for r in rows]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("transition matrix must be square and nonempty")
        if N is None:
            N = min(e.N for r in rows for e in r)
        self.N = N
        self.rows = [[e.restrict(N) if e.N != N else e for e in r] for r in rows]
        if check:
            self.det_power()

    # --- constructors -----------------------------------------------------
    @classmethod
    def diag(cls, entries: Sequence[TB], N: int | None = None) -> "TransitionMatrix":
        N = min(e.N for e in entries) if N is None else N
        n = len(entries)
        rows = [[entries[i] if i == k else TB.zero(N) for k in range(n)] for i in range(n)]
        return cls(rows, N)

    @classmethod
    def line_bundle(cls, k: int, N: int) -> "TransitionMatrix":
        """O_U(kD) as the 1 x 1 transition z^k."""
        return cls([[TB.monomial(k, 0, N)]], N)

    @classmethod
    def from_laurent(cls, rows: Sequence[Sequence[dict]], N: int, check: bool = True) -> "TransitionMatrix":
        return cls([[TB({(l, 0): c for l, c in e.items()}, N) for e in r] for r in rows], N, check)

    @classmethod
    def identity(cls, n: int, N: int) -> "TransitionMatrix":
        return cls.diag([TB.const(1, N)] * n, N)

    # --- inspection -------------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> TB:
        i, j = ij
        return self.rows[i][j]

    def det(self) -> TB:
        return _det(self.rows, self.N)

    def det_power(self) -> tuple[Fraction, int]:
        """(c, k) with det T = c * z^k modulo u^(N+1)."""
        mp = self.det().monomial_power()
        if mp is None or not mp[0]:
            raise SingularTransition(f"determinant {self.det()!r} is not a unit times a power of z")
        return mp

    def max_abs_z(self) -> int:
        return max(e.max_abs_z() for r in self.rows for e in r)

    def at_u0(self) -> list[list[dict]]:
        return [[e.at_u0() for e in r] for r in self.rows]

    # --- arithmetic -------------------------------------------------------
    def __matmul__(self, other: "TransitionMatrix") -> "TransitionMatrix":
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        N = min(self.N, other.N)
        n = self.rank
        rows = []
        for i in range(n):
            row = []
            for k in range(n):
                acc = TB.zero(N)
                for m in range(n):
                    a, b = self.rows[i][m], other.rows[m][k]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return TransitionMatrix(rows, N, check=False)

    def inverse(self) -> "TransitionMatrix":
        c, k = self.det_power()
        n = self.rank
        scale = TB.monomial(-k, 0, self.N, 1 / c)
        if n == 1:
            return TransitionMatrix([[scale]], self.N, check=False)
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                # adj[i][j] = (-1)^(i+j) * minor(j, i)
                minor = [r[:i] + r[i + 1:] for idx, r in enumerate(self.rows) if idx != j]
                cof = _det(minor, self.N)
                if (i + j) % 2:
                    cof = -cof
                row.append(cof * scale)
            rows.append(row)
        return TransitionMatrix(rows, self.N, check=False)

    def restrict(self, n: int) -> "TransitionMatrix":
        """E restricted to the n-th infinitesimal neighborhood of D."""
        if n < 0 or n > self.N:
            raise TruncationExceeded(f"order {n} outside the carried truncation 0..{self.N}")
        return TransitionMatrix([[e.restrict(n) for e in r] for r in self.rows], n, check=False)

    def block_sum(self, other: "TransitionMatrix") -> "TransitionMatrix":
        N = min(self.N, other.N)
        n, m = self.rank, other.rank
        rows = [[self.rows[i][k] if k < n else TB.zero(N) for k in range(n + m)] for i in range(n)]
        rows += [[other.rows[i][k - n] if k >= n else TB.zero(N) for k in range(n + m)] for i in range(m)]
        return TransitionMatrix(rows, N)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TransitionMatrix) or other.rank != self.rank:
            return NotImplemented
        return all(a == b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def dump(self) -> dict:
        """Stable JSON form: entries as sorted (l, i, "num/den") triples."""
        return {
            "N": self.N,
            "entries": [[[list(t) for t in e.triples()] for e in r] for r in self.rows],
        }

    def __repr__(self) -> str:
        return f"TransitionMatrix(N={self.N}, rows={self.rows!r})"


def laurent_matrix_mul(A: list[list[dict]], B: list[list[dict]]) -> list[list[dict]]:
    n = len(A)
    return [[_dot([A[i][m] for m in range(n)], [B[m][k] for m in range(n)]) for k in range(n)] for i in range(n)]


def _dot(xs, ys) -> dict:
    acc: dict = {}
    for x, y in zip(xs, ys):
        if x and y:
            acc = lp.add(acc, lp.mul(x, y))
    return acc
