"""Laurent-in-z, truncated-in-u series with exact rational coefficients.

An element is a finite sum of c * z^l * u^i with 0 <= i <= N; terms of
u-degree above N are discarded by every operation.  On the overlap of the
two charts (z, u) and (zeta, v) = (1/z, z*u) every holomorphic function has
this shape, so the same type carries chart-0 functions, chart-1 functions
(zeta^a v^i = z^(i-a) u^i) and transition-matrix entries.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact rational expected, got {type(x).__name__}")


class TruncatedBivariate:
    """Sparse map (l, i) -> Fraction, zero terms never stored."""

    __slots__ = ("coeffs", "N")

    def __init__(self, coeffs: Mapping[tuple[int, int], object] | None = None, N: int = 0):
        if N < 0:
            raise ValueError("u-truncation must be >= 0")
        self.N = N
        clean: dict[tuple[int, int], Fraction] = {}
        for (l, i), c in (coeffs or {}).items():
            if i < 0:
                raise ValueError(f"negative u-exponent {i}")
            if i > N:
                continue
            c = _q(c)
            if c:
                clean[(l, i)] = clean.get((l, i), 0) + c
                if not clean[(l, i)]:
                    del clean[(l, i)]
        self.coeffs = clean

    @classmethod
    def _raw(cls, coeffs: dict, N: int) -> "TruncatedBivariate":
        obj = cls.__new__(cls)
        obj.coeffs = coeffs
        obj.N = N
        return obj

    @classmethod
    def monomial(cls, l: int, i: int, N: int, c=1) -> "TruncatedBivariate":
        return cls({(l, i): c}, N)

    @classmethod
    def zero(cls, N: int) -> "TruncatedBivariate":
        return cls._raw({}, N)

    @classmethod
    def const(cls, c, N: int) -> "TruncatedBivariate":
        return cls({(0, 0): c}, N)

    @classmethod
    def from_chart1(cls, coeffs: Mapping[tuple[int, int], object], N: int) -> "TruncatedBivariate":
        """Build from chart-1 exponents {(a, i): c} meaning c * zeta^a * v^i."""
        return cls({(i - a, i): c for (a, i), c in coeffs.items()}, N)

    # --- inspection -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def z_window(self) -> tuple[int, int] | None:
        if not self.coeffs:
            return None
        ls = [l for l, _ in self.coeffs]
        return (min(ls), max(ls))

    def max_abs_z(self) -> int:
        w = self.z_window
        return 0 if w is None else max(abs(w[0]), abs(w[1]))

    def coeff(self, l: int, i: int) -> Fraction:
        return self.coeffs.get((l, i), Fraction(0))

    def u_order(self) -> int | None:
        """Lowest u-degree present (None for zero)."""
        return min((i for _, i in self.coeffs), default=None)

    def at_u0(self) -> dict[int, Fraction]:
        return {l: c for (l, i), c in self.coeffs.items() if i == 0}

    def is_chart0_regular(self) -> bool:
        return all(l >= 0 for l, _ in self.coeffs)

    def is_chart1_regular(self) -> bool:
        return all(l <= i for l, i in self.coeffs)

    def monomial_power(self) -> tuple[Fraction, int] | None:
        """(c, k) if self == c * z^k exactly, else None."""
        if len(self.coeffs) != 1:
            return None
        ((l, i), c), = self.coeffs.items()
        return (c, l) if i == 0 else None

    # --- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "TruncatedBivariate":
        if isinstance(other, TruncatedBivariate):
            return other
        return TruncatedBivariate.const(other, self.N)

    def __add__(self, other):
        other = self._coerce(other)
        N = min(self.N, other.N)
        out = {k: c for k, c in self.coeffs.items() if k[1] <= N}
        for k, c in other.coeffs.items():
            if k[1] > N:
                continue
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TruncatedBivariate._raw(out, N)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedBivariate._raw({k: -c for k, c in self.coeffs.items()}, self.N)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedBivariate):
            c = _q(other)
            if not c:
                return TruncatedBivariate.zero(self.N)
            return TruncatedBivariate._raw({k: v * c for k, v in self.coeffs.items()}, self.N)
        N = min(self.N, other.N)
        out: dict[tuple[int, int], Fraction] = {}
        for (l1, i1), c1 in self.coeffs.items():
            if i1 > N:
                continue
            for (l2, i2), c2 in other.coeffs.items():
                i = i1 + i2
                if i > N:
                    continue
                k = (l1 + l2, i)
                out[k] = out.get(k, 0) + c1 * c2
        return TruncatedBivariate._raw({k: c for k, c in out.items() if c}, N)

    __rmul__ = __mul__

    def shift(self, dl: int = 0, di: int = 0) -> "TruncatedBivariate":
        """Multiply by z^dl u^di; di < 0 divides by u and needs u^(-di) | self."""
        if di < 0 and any(i < -di for _, i in self.coeffs):
            raise ValueError(f"not divisible by u^{-di}")
        N = self.N + min(di, 0)
        out = {(l + dl, i + di): c for (l, i), c in self.coeffs.items() if i + di <= N}
        return TruncatedBivariate._raw(out, N)

    def restrict(self, n: int) -> "TruncatedBivariate":
        if n > self.N:
            raise ValueError(f"cannot restrict to order {n} above truncation {self.N}")
        return TruncatedBivariate._raw({k: c for k, c in self.coeffs.items() if k[1] <= n}, n)

    def with_truncation(self, N: int) -> "TruncatedBivariate":
        """Reinterpret at a lower (or equal) truncation."""
        return self.restrict(N)

    # --- comparison / display -------------------------------------------
    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedBivariate):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        N = min(self.N, other.N)
        a = {k: c for k, c in self.coeffs.items() if k[1] <= N}
        b = {k: c for k, c in other.coeffs.items() if k[1] <= N}
        return a == b

    def __hash__(self):
        return hash((frozenset(self.coeffs.items()), self.N))

    def triples(self) -> list[tuple[int, int, str]]:
        """Stable dump: sorted (l, i, "num/den") triples."""
        return [(l, i, _qstr(c)) for (l, i), c in sorted(self.coeffs.items(), key=lambda t: (t[0][1], t[0][0]))]

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"0 (mod u^{self.N + 1})"
        terms = []
        for (l, i), c in sorted(self.coeffs.items(), key=lambda t: (t[0][1], t[0][0])):
            mon = "*".join(x for x in (f"z^{l}" if l else "", f"u^{i}" if i else "") if x)
            terms.append(f"{c}*{mon}" if mon else f"{c}")
        return " + ".join(terms) + f" (mod u^{self.N + 1})"


def _qstr(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def laurent_to_series(poly: Mapping[int, object], N: int) -> TruncatedBivariate:
    """Embed a one-variable Laurent polynomial in z as a u-constant series."""
    return TruncatedBivariate({(l, 0): c for l, c in poly.items()}, N)


def from_triples(triples: Iterable, N: int) -> TruncatedBivariate:
    return TruncatedBivariate({(int(l), int(i)): Fraction(c) for l, i, c in triples}, N)
