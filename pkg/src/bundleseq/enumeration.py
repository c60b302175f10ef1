"""Exhaustive enumeration of admissible sequences and audits of the existence claims.

Every path of the successor relation from a start pair to its first balanced
pair is an admissible sequence, and every admissible sequence is realized by
some bundle, so the attained invariant sets below are exactly what bundles
with the given splitting type can produce.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from bundleseq.seqcore import (
    AdmissibleSequence,
    DomainError,
    SplittingPair,
    c2_defect,
    format_sequence,
    is_split_sequence,
    lemma11_box,
    split_sequence,
    w_invariant,
    z_invariant,
)

DEFAULT_MAX_J = 14
MAX_J_ENV = "BUNDLESEQ_MAX_J"


def max_j_cap() -> int:
    raw = os.environ.get(MAX_J_ENV)
    if raw is None:
        return DEFAULT_MAX_J
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{MAX_J_ENV} must be an integer, got {raw!r}") from None


def _pair(p) -> SplittingPair:
    return p if isinstance(p, SplittingPair) else SplittingPair(*p)


def successors(p) -> list[SplittingPair]:
    """Splitting types reachable by one negative elementary transformation.

    (a', b') with a' + b' = a + b + 1 and b < b' <= a' <= a, by decreasing a'.
    """
    p = _pair(p)
    if p.balanced:
        return []
    s = p.a + p.b + 1
    return [SplittingPair(s - bb, bb) for bb in range(p.b + 1, s // 2 + 1)]


def _check_cap(start: SplittingPair, max_j: int | None) -> None:
    cap = max_j_cap() if max_j is None else max_j
    # normalized j of the start pair
    j = start.a - (start.degree + 1) // 2
    if j > cap:
        raise DomainError(f"enumeration from {start} has j = {j} > cap {cap} "
                          f"(raise with max_j= or {MAX_J_ENV})")


def iter_maximal(start, max_j: int | None = None) -> Iterator[AdmissibleSequence]:
    """Depth-first, canonically ordered stream of all maximal sequences from start."""
    start = _pair(start)
    _check_cap(start, max_j)
    path = [start]

    def dfs(p: SplittingPair):
        if p.balanced:
            yield AdmissibleSequence(tuple(path))
            return
        for q in successors(p):
            path.append(q)
            yield from dfs(q)
            path.pop()

    yield from dfs(start)


def enumerate_maximal(start, max_j: int | None = None) -> list[AdmissibleSequence]:
    return list(iter_maximal(start, max_j))


@lru_cache(maxsize=None)
def _count(a: int, b: int) -> int:
    if a == b:
        return 1
    return sum(_count(q.a, q.b) for q in successors(SplittingPair(a, b)))


def count_maximal(start) -> int:
    start = _pair(start)
    # counts depend only on the gap a - b
    return _count(start.a - start.b, 0)


@lru_cache(maxsize=None)
def _suffix_values(a: int, b: int) -> frozenset[tuple[int, int]]:
    # (sum_{i<t} a_i - a_t^2, sum_i max(-b_i - 1, 0)) over all paths starting at (a, b)
    wb = max(-b - 1, 0)
    if a == b:
        return frozenset({(-a * a, wb)})
    out = set()
    for q in successors(SplittingPair(a, b)):
        for s, w in _suffix_values(q.a, q.b):
            out.add((a + s, wb + w))
    return frozenset(out)


@dataclass(frozen=True)
class AttainedSet:
    j: int
    epsilon: int
    pairs: frozenset[tuple[int, int]]  # (z, w)

    @property
    def k_values(self) -> frozenset[int]:
        return frozenset(z + w for z, w in self.pairs)


def _check_params(j: int, epsilon: int) -> None:
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    if epsilon not in (0, -1):
        raise DomainError(f"epsilon must be 0 or -1, got {epsilon}")


def attained_invariants(j: int, epsilon: int, max_j: int | None = None) -> AttainedSet:
    """All (z, w) realized by sequences from splitting type (j, -j + epsilon)."""
    _check_params(j, epsilon)
    start = SplittingPair(j, -j + epsilon)
    _check_cap(start, max_j)
    pairs = frozenset((c2 - w, w) for c2, w in _suffix_values(start.a, start.b))
    return AttainedSet(j, epsilon, pairs)


def attained_by_enumeration(j: int, epsilon: int, max_j: int | None = None) -> AttainedSet:
    """Same set as attained_invariants, built sequence by sequence."""
    _check_params(j, epsilon)
    pairs = {(z_invariant(s), w_invariant(s)) for s in iter_maximal((j, -j + epsilon), max_j)}
    return AttainedSet(j, epsilon, frozenset(pairs))


@dataclass(frozen=True)
class AuditReport:
    claim: str
    j: int
    epsilon: int
    claimed: dict
    attained: tuple
    missing: tuple = ()
    extra: tuple = ()
    details: dict = field(default_factory=dict)
    parts: tuple["AuditReport", ...] = ()

    @property
    def holds(self) -> bool:
        return not self.missing and not self.extra

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "j": self.j,
            "epsilon": self.epsilon,
            "claimed": self.claimed,
            "attained": _jsonable(self.attained),
            "missing": _jsonable(self.missing),
            "extra": _jsonable(self.extra),
            "holds": self.holds,
        }
        if self.details:
            out["details"] = self.details
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out


def _jsonable(items) -> list:
    return [list(x) if isinstance(x, tuple) else x for x in items]


def audit_theorem02(j: int, epsilon: int = 0) -> AuditReport:
    w_lo, w_hi, z_lo, z_hi = lemma11_box(j, epsilon)
    box = {(z, w) for z in range(z_lo, z_hi + 1) for w in range(w_lo, w_hi + 1)}
    got = set(attained_invariants(j, epsilon).pairs)
    return AuditReport(
        claim="Thm0.2",
        j=j,
        epsilon=epsilon,
        claimed={"w": [w_lo, w_hi], "z": [z_lo, z_hi]},
        attained=tuple(sorted(got)),
        missing=tuple(sorted(box - got)),
        extra=tuple(sorted(got - box)),
    )


def audit_theorem05(j: int) -> AuditReport:
    _check_params(j, 0)
    claimed = set(range(j, j * j + 1))
    got = set(attained_invariants(j, 0).k_values)
    return AuditReport(
        claim="Thm0.5",
        j=j,
        epsilon=0,
        claimed={"k": [j, j * j]},
        attained=tuple(sorted(got)),
        missing=tuple(sorted(claimed - got)),
        extra=tuple(sorted(got - claimed)),
    )


def audit_lemma11(j: int, epsilon: int = 0) -> AuditReport:
    """Bounds check: attained (z, w) outside the claimed box are reported as extra.

    ``details`` records the attained extremes, so sharpness of each bound
    (e.g. the lower bound on w) can be read off.
    """
    w_lo, w_hi, z_lo, z_hi = lemma11_box(j, epsilon)
    got = attained_invariants(j, epsilon).pairs
    outside = {(z, w) for z, w in got if not (z_lo <= z <= z_hi and w_lo <= w <= w_hi)}
    ws = [w for _, w in got]
    zs = [z for z, _ in got]
    return AuditReport(
        claim="Lemma1.1",
        j=j,
        epsilon=epsilon,
        claimed={"w": [w_lo, w_hi], "z": [z_lo, z_hi]},
        attained=tuple(sorted(got)),
        extra=tuple(sorted(outside)),
        details={
            "min_w": min(ws), "max_w": max(ws), "min_z": min(zs), "max_z": max(zs),
            "w_lower_sharp": min(ws) == w_lo, "w_upper_sharp": max(ws) == w_hi,
            "z_lower_sharp": min(zs) == z_lo, "z_upper_sharp": max(zs) == z_hi,
        },
    )


def audit_prop04(j: int, epsilon: int = 0, max_j: int | None = None) -> AuditReport:
    """Sequence-level shadows of the split-bundle characterization.

    Part "Prop0.4-ii-iv": the sequences with c2_defect = j(j - epsilon) should be
    exactly the split sequence.  Part "Prop0.4-iii": sequences attaining the
    maximal w should be exactly the split sequence; any other is a counterexample.
    """
    _check_params(j, epsilon)
    split = format_sequence(split_sequence(j, epsilon))
    c2_target = j * (j - epsilon)
    w_target = lemma11_box(j, epsilon)[1]
    at_c2, at_w = [], []
    for seq in iter_maximal((j, -j + epsilon), max_j):
        if c2_defect(seq) == c2_target:
            at_c2.append(seq)
        if w_invariant(seq) == w_target:
            at_w.append(seq)

    def part(name: str, claimed: dict, hits: list[AdmissibleSequence]) -> AuditReport:
        texts = [format_sequence(s) for s in hits]
        return AuditReport(
            claim=name,
            j=j,
            epsilon=epsilon,
            claimed=claimed,
            attained=tuple(texts),
            missing=() if split in texts else (split,),
            extra=tuple(format_sequence(s) for s in hits if not is_split_sequence(s)),
        )

    ii_iv = part("Prop0.4-ii-iv", {"c2_defect": c2_target, "only": split}, at_c2)
    iii = part("Prop0.4-iii", {"w": w_target, "only": split}, at_w)
    return AuditReport(
        claim="Prop0.4",
        j=j,
        epsilon=epsilon,
        claimed={"split_sequence": split, "c2_defect": c2_target, "w": w_target},
        attained=tuple(dict.fromkeys(ii_iv.attained + iii.attained)),
        missing=tuple(dict.fromkeys(ii_iv.missing + iii.missing)),
        extra=tuple(dict.fromkeys(ii_iv.extra + iii.extra)),
        details={"iii_counterexamples": list(iii.extra), "ii_iv_violations": list(ii_iv.extra)},
        parts=(ii_iv, iii),
    )


AUDITS = {
    "thm02": lambda j, eps: audit_theorem02(j, eps),
    "thm05": lambda j, eps: audit_theorem05(j),
    "prop04": lambda j, eps: audit_prop04(j, eps),
    "lemma11": lambda j, eps: audit_lemma11(j, eps),
}
