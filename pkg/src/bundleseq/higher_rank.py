"""Rank r splitting-type sequences and the higher direct image count.

Only the necessary conditions visible at this level are validated: sorted
tuples, constant rank, and total degree rising by one per transformation.
Which transformations are legal in rank >= 3 is not decided here, so callers
supply the sequence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from bundleseq.seqcore import DomainError, MalformedInput


@dataclass(frozen=True)
class SplittingTuple:
    degrees: tuple[int, ...]

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)


@dataclass(frozen=True)
class RankRSequence:
    tuples: tuple[SplittingTuple, ...]

    @property
    def rank(self) -> int:
        return self.tuples[0].rank

    @property
    def t(self) -> int:
        return len(self.tuples)


def _coerce(seq) -> list[tuple[int, ...]]:
    if isinstance(seq, RankRSequence):
        return [tp.degrees for tp in seq.tuples]
    out = []
    for item in seq:
        degs = item.degrees if isinstance(item, SplittingTuple) else item
        try:
            degs = tuple(degs)
        except TypeError:
            raise MalformedInput(f"not a tuple of degrees: {item!r}") from None
        if not all(isinstance(d, int) and not isinstance(d, bool) for d in degs):
            raise MalformedInput(f"degrees must be integers: {item!r}")
        out.append(degs)
    if not out:
        raise MalformedInput("sequence must contain at least one tuple")
    return out


def validate_rank_r(seq) -> list[str]:
    """Violated necessary conditions, empty when the sequence passes."""
    rows = _coerce(seq)
    problems = []
    r = len(rows[0])
    for i, row in enumerate(rows, start=1):
        if len(row) < 2:
            problems.append(f"tuple {i}: rank {len(row)} < 2")
        if len(row) != r:
            problems.append(f"tuple {i}: rank {len(row)} differs from rank {r} of the first tuple")
        if any(x < y for x, y in zip(row, row[1:])):
            problems.append(f"tuple {i}: degrees {row} not sorted non-increasing")
    for i in range(1, len(rows)):
        if sum(rows[i]) != sum(rows[i - 1]) + 1:
            problems.append(f"tuple {i + 1}: degree sum {sum(rows[i])}, expected {sum(rows[i - 1]) + 1}")
    return problems


def rank_r_sequence(seq) -> RankRSequence:
    problems = validate_rank_r(seq)
    if problems:
        raise MalformedInput("; ".join(problems))
    return RankRSequence(tuple(SplittingTuple(row) for row in _coerce(seq)))


def w_rank_r_exact(seq) -> int:
    """h^0(R^1 pi_* E) when every entry but the last is >= -1 at each step."""
    s = rank_r_sequence(seq)
    for i, tp in enumerate(s.tuples, start=1):
        if tp.degrees[-2] < -1:
            raise DomainError(f"tuple {i} has a(i, r-1) = {tp.degrees[-2]} < -1; "
                              "only the upper bound applies, use w_rank_r_bound")
    return sum(max(-tp.degrees[-1] - 1, 0) for tp in s.tuples)


def w_rank_r_bound(seq) -> int:
    s = rank_r_sequence(seq)
    return sum(max(-d - 1, 0) for tp in s.tuples for d in tp.degrees)


def parse_tuples(text: str) -> list[tuple[int, ...]]:
    rows = []
    for chunk in text.strip().split(";"):
        if not chunk.strip():
            continue
        try:
            rows.append(tuple(int(x) for x in chunk.split(",")))
        except ValueError:
            raise MalformedInput(f"non-integer entry in {chunk!r}") from None
    if not rows:
        raise MalformedInput("empty tuple text")
    return rows


def from_rank2(pairs: Iterable) -> RankRSequence:
    return rank_r_sequence([(p[0], p[1]) if not hasattr(p, "a") else (p.a, p.b) for p in pairs])
