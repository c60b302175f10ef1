"""Grothendieck splitting on D = P^1 via Birkhoff factorization.

For a 2 x 2 Laurent matrix M with det M = c * z^d we find A0 in GL2(Q[z])
and A1 in GL2(Q[1/z]) with

    A1 @ M @ A0 = diag(z^-a, z^-b),   a >= b,   a + b = -d,

so the bundle on D with transition M is O_D(a) + O_D(b).  The degree a is
the largest m for which E|_D(-m) has a global section; that section (or a
pair of them when a == b) is completed to a frame on each chart by a
Bezout identity, and the remaining off-diagonal entry is cleared by one
column operation over Q[z] and one row operation over Q[1/z].
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from bundleseq.formal import laurent as lp
from bundleseq.formal.linalg import nullspace
from bundleseq.formal.matrix import SingularTransition, laurent_matrix_mul

LMatrix = list  # 2 x 2 list of Laurent dicts


@dataclass(frozen=True)
class Birkhoff:
    a: int
    b: int
    A0: LMatrix  # entries in Q[z]
    A1: LMatrix  # entries in Q[1/z]


def _det2(M: LMatrix) -> dict:
    return lp.sub(lp.mul(M[0][0], M[1][1]), lp.mul(M[0][1], M[1][0]))


def det_monomial(M: LMatrix) -> tuple[Fraction, int]:
    mono = lp.as_monomial(_det2(M))
    if mono is None:
        raise SingularTransition(f"restriction to D has determinant {_det2(M)}, not c*z^d")
    return mono


def _inverse(M: LMatrix) -> LMatrix:
    c, d = det_monomial(M)
    s = lp.monomial(-d, 1 / c)
    return [
        [lp.mul(M[1][1], s), lp.neg(lp.mul(M[0][1], s))],
        [lp.neg(lp.mul(M[1][0], s)), lp.mul(M[0][0], s)],
    ]


def _max_exponent(M: LMatrix) -> int:
    return max(max(e) for r in M for e in r if e)


def sections_on_D(M: LMatrix, m: int) -> list[tuple[dict, dict]]:
    """Basis of H^0(E|_D (x) O_D(-m)) as chart-0 polynomial pairs (f, g).

    A pair qualifies when z^m * M @ (f, g) has no positive powers of z.
    """
    deg = _max_exponent(_inverse(M)) - m
    if deg < 0:
        return []
    n = deg + 1
    cols = 2 * n  # f_0..f_deg, g_0..g_deg
    eqs: dict[tuple[int, int], list] = {}
    for r in range(2):
        for comp in range(2):
            for e, c in M[r][comp].items():
                for k in range(n):
                    ex = e + k + m
                    if ex > 0:
                        row = eqs.setdefault((r, ex), [Fraction(0)] * cols)
                        row[comp * n + k] += c
    rows = list(eqs.values())
    if not rows:
        basis = [[Fraction(int(i == k)) for i in range(cols)] for k in range(cols)]
    else:
        basis = nullspace(rows, cols)
    out = []
    for vec in basis:
        f = {k: vec[k] for k in range(n) if vec[k]}
        g = {k: vec[n + k] for k in range(n) if vec[n + k]}
        out.append((f, g))
    return out


def birkhoff(M: LMatrix) -> Birkhoff:
    c, d = det_monomial(M)
    m = _max_exponent(_inverse(M))
    while True:
        secs = sections_on_D(M, m)
        if secs:
            break
        m -= 1
        if 2 * m < -d - 2:
            raise ArithmeticError("no section found above the balanced degree")
    a, b = m, -d - m
    if a < b:
        raise ArithmeticError(f"inconsistent splitting ({a}, {b})")

    if a > b:
        if len(secs) != 1:
            raise ArithmeticError(f"expected one section of the top summand, found {len(secs)}")
        f, g = secs[0]
        x, y = lp.bezout(f, g, +1)
        A0 = [[f, lp.neg(y)], [g, x]]
        s1 = [lp.mul(lp.monomial(a), lp.add(lp.mul(M[r][0], f), lp.mul(M[r][1], g))) for r in range(2)]
        X, Y = lp.bezout(s1[0], s1[1], -1)
        A1 = [[X, Y], [lp.neg(s1[1]), s1[0]]]
        R = laurent_matrix_mul(laurent_matrix_mul(A1, M), A0)
        q = R[0][1]
        cc = lp.as_monomial(R[1][1])[0]
        q_hi = {l: v for l, v in q.items() if l >= -a}
        q_lo = {l: v for l, v in q.items() if l < -a}
        col = lp.neg(lp.mul(q_hi, lp.monomial(a)))
        row = lp.neg(lp.mul(q_lo, lp.monomial(b, 1 / cc)))
        A0 = laurent_matrix_mul(A0, [[{0: Fraction(1)}, col], [{}, {0: Fraction(1)}]])
        A1 = laurent_matrix_mul([[{0: Fraction(1)}, row], [{}, {0: 1 / cc}]], A1)
    else:
        if len(secs) != 2:
            raise ArithmeticError(f"balanced type needs two sections, found {len(secs)}")
        (f1, g1), (f2, g2) = secs
        A0 = [[f1, f2], [g1, g2]]
        S1 = laurent_matrix_mul(laurent_matrix_mul([[lp.monomial(a), {}], [{}, lp.monomial(a)]], M), A0)
        A1 = _inverse(S1)

    R = laurent_matrix_mul(laurent_matrix_mul(A1, M), A0)
    expected = [[lp.monomial(-a), {}], [{}, lp.monomial(-b)]]
    if R != expected:
        raise ArithmeticError(f"factorization check failed: {R}")
    if any(e < 0 for r in A0 for x in r for e in x) or any(e > 0 for r in A1 for x in r for e in x):
        raise ArithmeticError("frame change is not regular on its chart")
    return Birkhoff(a, b, A0, A1)
