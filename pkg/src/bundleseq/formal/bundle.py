"""Rank-2 bundles with c1 = 0 as canonical transition matrices.

A bundle with splitting type (j, -j) is an extension of O_U(-jD) by
O_U(jD), written as

    T = [[z^j, p], [0, z^-j]],   p = sum p[i, l] z^l u^i,

where only monomials with 1 <= i <= 2j - 2 and i - j + 1 <= l <= j - 1 can
change the isomorphism class; the rest are absorbed by frame changes.

Two independent routes to w = h^0(R^1 pi_* E) live here: running the
elementary-transformation algorithm on T and feeding the splitting types to
the closed form, and computing H^1 of E on a thick neighborhood of D by
Cech linear algebra over the two standard charts.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from bundleseq.formal import laurent as lp
from bundleseq.formal.linalg import Echelon
from bundleseq.formal.matrix import TransitionMatrix, TruncationExceeded
from bundleseq.formal.series import TruncatedBivariate as TB
from bundleseq.formal.splitting import birkhoff
from bundleseq.seqcore import (
    AdmissibleSequence,
    InvariantReport,
    MalformedInput,
    SplittingPair,
    invariants_report,
)

log = logging.getLogger(__name__)


class WindowError(ValueError):
    def __init__(self, j: int, i: int, l: int):
        self.offending = (i, l)
        super().__init__(f"coefficient (i={i}, l={l}) lies outside the canonical window for j={j}: "
                         f"need 1 <= i <= {2 * j - 2} and i-{j - 1} <= l <= {j - 1}")


class BalancedError(ValueError):
    """No negative elementary transformation applies to a balanced bundle."""


class InstabilityError(ArithmeticError):
    """Cech dimension changed when the truncation window was enlarged."""


def canonical_window(j: int) -> list[tuple[int, int]]:
    """All (i, l) allowed in the extension polynomial p for splitting (j, -j)."""
    return [(i, l) for i in range(1, 2 * j - 1) for l in range(i - j + 1, j)]


def in_window(j: int, i: int, l: int) -> bool:
    return 1 <= i <= 2 * j - 2 and i - j + 1 <= l <= j - 1


@dataclass(frozen=True)
class CanonicalExtension:
    j: int
    p_coefficients: tuple[tuple[tuple[int, int], Fraction], ...]

    def __post_init__(self) -> None:
        if self.j < 1:
            raise MalformedInput(f"j must be >= 1, got {self.j}")
        for (i, l), _ in self.p_coefficients:
            if not in_window(self.j, i, l):
                raise WindowError(self.j, i, l)

    @classmethod
    def of(cls, j: int, p: Mapping[tuple[int, int], object] | None = None) -> "CanonicalExtension":
        items = tuple(sorted((k, Fraction(c)) for k, c in (p or {}).items() if Fraction(c)))
        return cls(j, items)

    def matrix(self, N: int | None = None) -> TransitionMatrix:
        N = 2 * self.j + 2 if N is None else N
        p = TB({(l, i): c for (i, l), c in self.p_coefficients}, N)
        return TransitionMatrix(
            [[TB.monomial(self.j, 0, N), p], [TB.zero(N), TB.monomial(-self.j, 0, N)]], N
        )


def make_canonical(j: int, p_coefficients: Mapping[tuple[int, int], object] | None = None,
                   N: int | None = None) -> TransitionMatrix:
    """T = [[z^j, p], [0, z^-j]] with u-truncation 2j + 2 by default.

    p_coefficients maps (i, l) -> rational coefficient of z^l u^i.
    """
    return CanonicalExtension.of(j, p_coefficients).matrix(N)


def parse_p_json(text: str) -> dict[tuple[int, int], Fraction]:
    """[{"i": 1, "l": 1, "c": "1/2"}, ...] -> {(i, l): Fraction}."""
    try:
        items = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"p is not valid JSON: {exc}") from None
    if not isinstance(items, list):
        raise MalformedInput("p must be a JSON list of {i, l, c} objects")
    out: dict[tuple[int, int], Fraction] = {}
    for it in items:
        try:
            i, l = int(it["i"]), int(it["l"])
            c = Fraction(str(it["c"]))
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            raise MalformedInput(f"bad p entry {it!r}") from None
        out[(i, l)] = out.get((i, l), 0) + c
    return out


def restrict_to_infinitesimal(T: TransitionMatrix, n: int) -> TransitionMatrix:
    """E restricted to D^(n), the subscheme cut out by u^(n+1)."""
    return T.restrict(n)


def splitting_type_on_D(T: TransitionMatrix) -> SplittingPair:
    if T.rank == 1:
        c, k = T.det_power()
        raise ValueError(f"rank 1: the restriction is O_D({-k})")
    if T.rank != 2:
        raise ValueError("splitting types are computed for rank 2 only")
    fac = birkhoff(T.at_u0())
    return SplittingPair(fac.a, fac.b)


def line_bundle_w(k: int) -> int:
    """h^0(R^1 pi_* O_U(kD)): zero for k <= 1, k(k-1)/2 above."""
    return k * (k - 1) // 2 if k >= 2 else 0


def _lift(A: list[list[dict]], N: int) -> TransitionMatrix:
    return TransitionMatrix.from_laurent(A, N, check=False)


def elementary_transform(T: TransitionMatrix) -> TransitionMatrix:
    """Kernel of E onto its lowest-degree summand O_D(b) on D.

    After a frame change regular on each chart (constant in u) makes T
    diagonal modulo u, the kernel has frame (e1, u*e2) on chart 0 and
    (e1, v*e2) on chart 1, so T' = diag(1, 1/(z u)) @ T @ diag(1, u).
    One u-order is consumed.
    """
    if T.rank != 2:
        raise ValueError("elementary transformations are implemented for rank 2")
    fac = birkhoff(T.at_u0())
    if fac.a == fac.b:
        raise BalancedError(f"splitting type ({fac.a}, {fac.b}) is balanced; the sequence has ended")
    if T.N < 1:
        raise TruncationExceeded("no u-order left for another elementary transformation")
    N = T.N
    Tt = _lift(fac.A1, N) @ T @ _lift(fac.A0, N)
    if Tt[1, 0].at_u0() or Tt[0, 1].at_u0():
        raise ArithmeticError("frame change did not diagonalize T modulo u")
    rows = [
        [Tt[0, 0], Tt[0, 1].shift(0, 1)],
        [Tt[1, 0].shift(-1, -1), Tt[1, 1].shift(-1, 0)],
    ]
    return TransitionMatrix(rows, N - 1)


def associated_sequence_of_bundle(T: TransitionMatrix) -> AdmissibleSequence:
    pairs = [splitting_type_on_D(T)]
    while not pairs[-1].balanced:
        if T.N < 1:
            raise TruncationExceeded(
                f"u-truncation exhausted after {len(pairs)} splitting types; rebuild T with larger N"
            )
        T = elementary_transform(T)
        pairs.append(splitting_type_on_D(T))
    return AdmissibleSequence(tuple(pairs))


# --- Cech oracle ---------------------------------------------------------

def _cech_dim(Tinv: TransitionMatrix, n: int, L: int) -> int:
    """dim of overlap cochains / (chart-0 + chart-1 sections) on D^(n).

    In the chart-0 frame the coboundary is (s0, s1) -> Tinv @ s1 - s0.  The
    chart-0 term spans every z^l u^i with l >= 0, so the quotient is read on
    l in [-L, -1]; monomials below -L are assumed to be coboundaries, which
    the caller checks by enlarging L.
    """
    r = Tinv.rank
    e_hi = max((l for row in Tinv.rows for ent in row for (l, _) in ent.coeffs), default=0)
    target = r * L * (n + 1)
    ech = Echelon()
    for i in range(n + 1):
        # chart-1 monomial zeta^a v^i = z^(i-a) u^i
        for a in range(0, i + L + e_hi + 1):
            base = i - a
            for col in range(r):
                vec = {}
                for s in range(r):
                    for (l, ii), c in Tinv.rows[s][col].coeffs.items():
                        deg = ii + i
                        ll = l + base
                        if deg > n or not (-L <= ll <= -1):
                            continue
                        key = (deg, s, ll)
                        vec[key] = vec.get(key, 0) + c
                vec = {k: v for k, v in vec.items() if v}
                if vec:
                    ech.add(vec)
    return target - ech.rank


def cech_w(T: TransitionMatrix, n_max: int | None = None, L: int | None = None,
           check: bool = True) -> int:
    """h^1(U, E) = h^0(Z, R^1 pi_* E) from the truncated Cech complex.

    n_max defaults to N - 1 so the stabilization check can look one order
    deeper; L defaults to 2e + n_max with e the largest |z-exponent| in T and
    its inverse.  With check=True the value must not change when both are
    raised by one.
    """
    N = T.N
    n = N - 1 if n_max is None else n_max
    if n < 0 or n > N:
        raise TruncationExceeded(f"u-order {n} outside the carried truncation 0..{N}")
    Tinv = T.inverse()
    e = max(T.max_abs_z(), Tinv.max_abs_z())
    width = 2 * e + n if L is None else L
    if width < 1:
        width = 1
    val = _cech_dim(Tinv.restrict(n), n, width)
    if check:
        if n + 1 > N:
            raise TruncationExceeded(
                f"stabilization needs u-order {n + 1} but T is truncated at {N}"
            )
        val2 = _cech_dim(Tinv.restrict(n + 1), n + 1, width + 1)
        if val2 != val:
            raise InstabilityError(f"cech dimension {val} at (n={n}, L={width}) "
                                   f"became {val2} at (n={n + 1}, L={width + 1})")
    log.debug("cech_w n=%d L=%d -> %d", n, width, val)
    return val


@dataclass(frozen=True)
class BundleInvariants:
    report: InvariantReport
    cech_w: int | None = None

    @property
    def agrees(self) -> bool | None:
        return None if self.cech_w is None else self.cech_w == self.report.w

    def to_json(self) -> dict:
        out = self.report.to_json()
        if self.cech_w is not None:
            out["cech_w"] = self.cech_w
            out["agree"] = self.agrees
        return out


def invariants_of_bundle(T: TransitionMatrix, verify: bool = False) -> BundleInvariants:
    """Closed-form invariants of T's associated sequence; with verify, also cech_w.

    A disagreement is returned (agrees == False), never raised.
    """
    report = invariants_report(associated_sequence_of_bundle(T))
    return BundleInvariants(report, cech_w(T) if verify else None)


def gauge(T: TransitionMatrix, A1: TransitionMatrix, A0: TransitionMatrix) -> TransitionMatrix:
    """A1 @ T @ A0 for A0 regular on chart 0 and A1 regular on chart 1."""
    for A, ok, name in ((A0, TB.is_chart0_regular, "A0"), (A1, TB.is_chart1_regular, "A1")):
        if not all(ok(e) for r in A.rows for e in r):
            raise ValueError(f"{name} is not regular on its chart")
        c, k = A.det_power()
        if k != 0:
            raise ValueError(f"{name} is not invertible on its chart")
    return A1 @ T @ A0


def laurent_diag(*exps: int) -> list[list[dict]]:
    n = len(exps)
    return [[lp.monomial(exps[i]) if i == k else {} for k in range(n)] for i in range(n)]
