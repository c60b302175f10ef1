"""Splitting types, admissible sequences and their closed-form invariants.

A rank-2 bundle E on a neighborhood of an exceptional curve D restricts to
D as O_D(a) + O_D(b), a >= b.  Repeatedly taking the kernel of E onto its
lowest-degree summand on D produces a chain of splitting types ending at a
balanced pair; that chain determines

    w  = h^0(R^1 pi_* E)            = sum_i max(-b_i - 1, 0)
    c2 = c2(E) - c2(pi_*(E)^**)     = sum_{i<t} a_i - a_t^2
    z  = h^0(Q)                     = c2 - w
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


class MalformedInput(ValueError):
    """Input that cannot be interpreted as pairs of integers."""


class DomainError(ValueError):
    """A formula was applied outside the range where it is valid."""


class InvalidSequence(ValueError):
    def __init__(self, violations: Sequence["Violation"]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True, order=True)
class SplittingPair:
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (isinstance(self.a, int) and isinstance(self.b, int)):
            raise MalformedInput(f"splitting degrees must be integers, got {self.a!r}, {self.b!r}")
        if self.a < self.b:
            raise MalformedInput(f"splitting pair needs a >= b, got ({self.a}, {self.b})")

    @property
    def balanced(self) -> bool:
        return self.a == self.b

    @property
    def degree(self) -> int:
        return self.a + self.b

    def shifted(self, s: int) -> "SplittingPair":
        """Degrees after twisting by O_U(sD), i.e. (a - s, b - s)."""
        return SplittingPair(self.a - s, self.b - s)

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Violation:
    prop: str  # "i" | "ii" | "iii" | "iv"
    index: int  # 1-based position where the check failed
    message: str

    def __str__(self) -> str:
        return f"property {self.prop} at i={self.index}: {self.message}"


@dataclass(frozen=True)
class ValidationResult:
    violations: tuple[Violation, ...] = ()

    @property
    def valid(self) -> bool:
        return not self.violations

    @property
    def violated(self) -> list[str]:
        order = ["i", "ii", "iii", "iv"]
        return [p for p in order if any(v.prop == p for v in self.violations)]

    def __bool__(self) -> bool:
        return self.valid


def _coerce_pairs(pairs: Iterable) -> list[tuple[int, int]]:
    out = []
    for p in pairs:
        if isinstance(p, SplittingPair):
            out.append(p.as_tuple())
            continue
        try:
            a, b = p
        except (TypeError, ValueError):
            raise MalformedInput(f"not a pair: {p!r}") from None
        if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
            raise MalformedInput(f"pair entries must be integers: {p!r}")
        out.append((a, b))
    if not out:
        raise MalformedInput("sequence must contain at least one pair")
    return out


def validate_sequence(pairs: Iterable) -> ValidationResult:
    """Check admissibility properties i-iv and report every violation."""
    ps = _coerce_pairs(pairs)
    t = len(ps)
    bad: list[Violation] = []
    for i, (a, b) in enumerate(ps, start=1):
        if a < b:
            bad.append(Violation("i", i, f"a={a} < b={b}"))
    a1, b1 = ps[0]
    for i in range(2, t + 1):
        a, b = ps[i - 1]
        if a + b != a1 + b1 + i - 1:
            bad.append(Violation("ii", i, f"a+b={a + b}, expected {a1 + b1 + i - 1}"))
    for i in range(1, t):
        (a, b), (an, bn) = ps[i - 1], ps[i]
        if not (a >= an >= bn > b):
            bad.append(Violation("iii", i, f"need {a} >= {an} >= {bn} > {b}"))
    at, bt = ps[-1]
    if at != bt:
        bad.append(Violation("iv", t, f"last pair ({at},{bt}) is not balanced"))
    for i, (a, b) in enumerate(ps[:-1], start=1):
        if a == b:
            bad.append(Violation("iv", i, "balanced pair before the end of the sequence"))
    return ValidationResult(tuple(bad))


@dataclass(frozen=True)
class AdmissibleSequence:
    """A validated chain (a_1, b_1) -> ... -> (a_t, b_t)."""

    pairs: tuple[SplittingPair, ...]

    def __post_init__(self) -> None:
        res = validate_sequence(self.pairs)
        if not res.valid:
            raise InvalidSequence(res.violations)

    @classmethod
    def of(cls, pairs: Iterable) -> "AdmissibleSequence":
        ps = _coerce_pairs(pairs)
        res = validate_sequence(ps)
        if not res.valid:
            raise InvalidSequence(res.violations)
        return cls(tuple(SplittingPair(a, b) for a, b in ps))

    @property
    def t(self) -> int:
        return len(self.pairs)

    @property
    def first(self) -> SplittingPair:
        return self.pairs[0]

    @property
    def last(self) -> SplittingPair:
        return self.pairs[-1]

    @property
    def is_normalized(self) -> bool:
        return self.first.degree in (0, -1)

    def shifted(self, s: int) -> "AdmissibleSequence":
        return AdmissibleSequence(tuple(p.shifted(s) for p in self.pairs))

    def as_lists(self) -> list[list[int]]:
        return [[p.a, p.b] for p in self.pairs]

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(self.pairs)

    def __str__(self) -> str:
        return "->".join(str(p) for p in self.pairs)


def _as_sequence(seq) -> AdmissibleSequence:
    if isinstance(seq, AdmissibleSequence):
        return seq
    return AdmissibleSequence.of(seq)


def split_sequence(j: int, epsilon: int) -> AdmissibleSequence:
    """Sequence of the split bundle O_U(-jD) + O_U((j - epsilon)D).

    a_i = j and b_i = -j + epsilon + i - 1 until b reaches j.
    """
    if j < 0:
        raise DomainError(f"j must be >= 0, got {j}")
    if epsilon not in (0, -1):
        raise DomainError(f"epsilon must be 0 or -1, got {epsilon}")
    t = 2 * j + 1 - epsilon
    return AdmissibleSequence(tuple(SplittingPair(j, -j + epsilon + i - 1) for i in range(1, t + 1)))


def normalization_shift(seq) -> int:
    seq = _as_sequence(seq)
    return (seq.first.degree + 1) // 2


def normalize_sequence(seq) -> tuple[AdmissibleSequence, int]:
    """Twist so that a_1 + b_1 is 0 or -1; returns the twisted sequence and s."""
    seq = _as_sequence(seq)
    s = normalization_shift(seq)
    return (seq.shifted(s) if s else seq), s


def w_invariant(seq) -> int:
    seq = _as_sequence(seq)
    if seq.last.a < -1:
        # terminal O(-a_t D)^2 would carry R^1 of its own
        raise DomainError("formula valid only for terminal value >= -1 "
                          f"(got a_t = {seq.last.a}); normalize the sequence first")
    return sum(max(-p.b - 1, 0) for p in seq.pairs)


def c2_defect(seq) -> int:
    seq = _as_sequence(seq)
    return sum(p.a for p in seq.pairs[:-1]) - seq.last.a ** 2


def z_invariant(seq) -> int:
    seq = _as_sequence(seq)
    if not seq.is_normalized:
        raise DomainError(
            f"z is defined for normalized sequences (a_1 + b_1 in {{0, -1}}), got "
            f"a_1 + b_1 = {seq.first.degree}; apply normalize_sequence first"
        )
    return c2_defect(seq) - w_invariant(seq)


def lemma11_box(j: int, epsilon: int) -> tuple[int, int, int, int]:
    """Claimed ranges (w_min, w_max, z_min, z_max) for splitting type (j, -j + epsilon)."""
    if j < 1:
        raise DomainError(f"j must be >= 1, got {j}")
    if epsilon not in (0, -1):
        raise DomainError(f"epsilon must be 0 or -1, got {epsilon}")
    return (j - 1 - epsilon, j * (j - 1) // 2 - epsilon * j, 1, j * (j + 1) // 2)


def is_split_sequence(seq) -> bool:
    norm, _ = normalize_sequence(seq)
    return norm == split_sequence(norm.first.a, norm.first.degree)


@dataclass(frozen=True)
class InvariantReport:
    sequence: AdmissibleSequence
    w: int
    c2_defect: int
    split: bool
    z: int | None = None
    j: int | None = None
    epsilon: int | None = None
    shift: int = field(default=0, compare=False)

    def __post_init__(self) -> None:
        assert self.w >= 0
        if self.z is not None:
            assert self.z + self.w == self.c2_defect

    def to_json(self) -> dict:
        return {
            "sequence": self.sequence.as_lists(),
            "t": self.sequence.t,
            "w": self.w,
            "c2_defect": self.c2_defect,
            "z": self.z,
            "j": self.j,
            "epsilon": self.epsilon,
            "split": self.split,
        }


def invariants_report(seq) -> InvariantReport:
    seq = _as_sequence(seq)
    w = w_invariant(seq)
    c2 = c2_defect(seq)
    if seq.is_normalized:
        z, j, eps = c2 - w, seq.first.a, seq.first.degree
    else:
        z = j = eps = None
    return InvariantReport(seq, w=w, c2_defect=c2, split=is_split_sequence(seq), z=z, j=j, epsilon=eps)


def parse_sequence(text: str) -> list[tuple[int, int]]:
    """Parse "a,b;a,b;..." into integer pairs (no admissibility check)."""
    pairs = []
    for chunk in text.strip().split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [x.strip() for x in chunk.split(",")]
        if len(parts) != 2:
            raise MalformedInput(f"expected 'a,b', got {chunk!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise MalformedInput(f"non-integer entry in {chunk!r}") from None
    if not pairs:
        raise MalformedInput("empty sequence text")
    return pairs


def format_sequence(seq) -> str:
    return ";".join(f"{p.a},{p.b}" for p in _as_sequence(seq).pairs)
