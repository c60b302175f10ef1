"""One-variable Laurent polynomials over Q as {exponent: Fraction} dicts."""

from __future__ import annotations

from fractions import Fraction

Laurent = dict  # int -> Fraction, zeros omitted


def clean(p) -> Laurent:
    return {e: Fraction(c) for e, c in p.items() if c}


def add(p: Laurent, q: Laurent) -> Laurent:
    out = dict(p)
    for e, c in q.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def neg(p: Laurent) -> Laurent:
    return {e: -c for e, c in p.items()}


def sub(p: Laurent, q: Laurent) -> Laurent:
    return add(p, neg(q))


def mul(p: Laurent, q: Laurent) -> Laurent:
    out: dict[int, Fraction] = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def scale(p: Laurent, c) -> Laurent:
    c = Fraction(c)
    return {e: v * c for e, v in p.items()} if c else {}


def monomial(e: int, c=1) -> Laurent:
    return {e: Fraction(c)} if c else {}


def span(p: Laurent) -> tuple[int, int] | None:
    return (min(p), max(p)) if p else None


def as_monomial(p: Laurent) -> tuple[Fraction, int] | None:
    if len(p) != 1:
        return None
    (e, c), = p.items()
    return c, e


# --- dense polynomials in one variable (index = degree) ----------------

def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _to_dense(p: Laurent, sign: int) -> list:
    # sign=+1 reads exponents as degrees in z, sign=-1 as degrees in 1/z
    if not p:
        return []
    degs = {sign * e: c for e, c in p.items()}
    if min(degs) < 0:
        raise ValueError("not a polynomial in the requested variable")
    out = [Fraction(0)] * (max(degs) + 1)
    for d, c in degs.items():
        out[d] = Fraction(c)
    return _trim(out)


def _from_dense(a: list, sign: int) -> Laurent:
    return {sign * d: c for d, c in enumerate(a) if c}


def _dsub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _trim([(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)])


def _dmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _ddivmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        d = len(a) - len(b)
        f = a[-1] / lead
        q[d] = f
        for k, y in enumerate(b):
            a[k + d] -= f * y
        _trim(a)
    return _trim(q), a


def bezout(f: Laurent, g: Laurent, sign: int = 1) -> tuple[Laurent, Laurent]:
    """x, y with x*f + y*g = 1 in Q[z] (sign=+1) or Q[1/z] (sign=-1).

    Raises ValueError when f and g have a common root.
    """
    a, b = _to_dense(f, sign), _to_dense(g, sign)
    # invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b
    r0, s0, t0 = a, [Fraction(1)], []
    r1, s1, t1 = b, [], [Fraction(1)]
    while r1:
        q, r = _ddivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _dsub(s0, _dmul(q, s1))
        t0, t1 = t1, _dsub(t0, _dmul(q, t1))
    if len(r0) != 1:
        raise ValueError("polynomials are not coprime")
    inv = 1 / r0[0]
    return (_from_dense([c * inv for c in s0], sign), _from_dense([c * inv for c in t0], sign))
