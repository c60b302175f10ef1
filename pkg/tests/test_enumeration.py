from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bundleseq.enumeration import (
    attained_by_enumeration,
    attained_invariants,
    audit_lemma11,
    audit_prop04,
    audit_theorem02,
    audit_theorem05,
    count_maximal,
    enumerate_maximal,
    iter_maximal,
    successors,
)
from bundleseq.seqcore import (
    AdmissibleSequence,
    DomainError,
    SplittingPair,
    format_sequence,
    split_sequence,
    validate_sequence,
)

P = SplittingPair


def brute_force_sequences(a: int, b: int) -> set[tuple]:
    """Every admissible sequence starting at (a, b), found by filtering
    candidate chains with validate_sequence only.

    Candidates: any strictly increasing b_2 < ... < b_t in (b, a], with a_i
    fixed by the degree sum; 2^(a-b) chains in total.
    """
    found = set()
    for t in range(1, a - b + 2):
        for tail in itertools.combinations(range(b + 1, a + 1), t - 1):
            bs = (b,) + tail
            pairs = [(a + b + i - bi, bi) for i, bi in enumerate(bs)]
            if validate_sequence(pairs).valid:
                found.add(tuple(pairs))
    return found


class TestSuccessors:
    @pytest.mark.parametrize("b", [-3, 0, 2])
    def test_gap_four(self, b):
        assert successors((b + 4, b)) == [P(b + 4, b + 1), P(b + 3, b + 2)]

    def test_terminal(self):
        assert successors((5, 5)) == []

    def test_three_minus_three(self):
        assert successors((3, -3)) == [P(3, -2), P(2, -1), P(1, 0)]


class TestEnumerate:
    def test_example_one(self):
        assert [s.as_lists() for s in enumerate_maximal((2, 0))] == [[[2, 0], [2, 1], [2, 2]]]

    def test_example_two_exact_paths(self):
        b = 0
        got = [s.as_lists() for s in enumerate_maximal((b + 4, b))]
        assert got == [
            [[b + 4, b], [b + 4, b + 1], [b + 4, b + 2], [b + 4, b + 3], [b + 4, b + 4]],
            [[b + 4, b], [b + 4, b + 1], [b + 3, b + 3]],
            [[b + 4, b], [b + 3, b + 2], [b + 3, b + 3]],
        ]

    def test_three_minus_three_has_eight(self):
        seqs = enumerate_maximal((3, -3))
        assert len(seqs) == 8
        first_steps = [s.pairs[1] for s in seqs]
        assert first_steps.count(P(1, 0)) == 1
        assert first_steps.count(P(2, -1)) == 2
        assert first_steps.count(P(3, -2)) == 5

    @pytest.mark.parametrize("start", [(2, 0), (4, 0), (3, -3), (4, -4), (3, -4), (5, 1), (0, 0), (1, -6)])
    def test_matches_brute_force(self, start):
        got = [tuple(p.as_tuple() for p in s.pairs) for s in enumerate_maximal(start)]
        assert len(got) == len(set(got))
        assert set(got) == brute_force_sequences(*start)

    def test_canonical_order_is_reverse_lexicographic(self):
        got = [s.as_lists() for s in enumerate_maximal((5, -5))]
        assert got == sorted(got, reverse=True)

    @pytest.mark.parametrize("start, n", [((2, 0), 1), ((4, 0), 3), ((3, -3), 8)])
    def test_count(self, start, n):
        assert count_maximal(start) == n

    @pytest.mark.parametrize("gap", range(0, 13))
    def test_count_equals_length(self, gap):
        assert count_maximal((gap, 0)) == len(enumerate_maximal((gap, 0)))

    def test_cap(self):
        with pytest.raises(DomainError, match="cap"):
            enumerate_maximal((15, -15))
        assert len(enumerate_maximal((3, -3), max_j=3)) == 8
        with pytest.raises(DomainError):
            enumerate_maximal((3, -3), max_j=2)

    def test_cap_env(self, monkeypatch):
        monkeypatch.setenv("BUNDLESEQ_MAX_J", "2")
        with pytest.raises(DomainError):
            list(iter_maximal((3, -3)))

    @pytest.mark.parametrize("j", range(1, 7))
    @pytest.mark.parametrize("eps", [0, -1])
    def test_length_and_parity(self, j, eps):
        for s in iter_maximal((j, -j + eps)):
            assert s.t <= 2 * j + 1 - eps
            assert (s.t - (1 - eps)) % 2 == 0
            assert 2 * s.last.a == eps + s.t - 1
            assert s.last.a >= 0


class TestAttained:
    def test_j2(self):
        assert attained_invariants(2, 0).pairs == {(1, 1), (2, 1), (3, 1)}

    def test_j1(self):
        assert attained_invariants(1, 0).pairs == {(1, 0)}

    def test_j3(self):
        assert attained_invariants(3, 0).pairs == {
            (1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (4, 3), (5, 3), (6, 3)
        }

    @pytest.mark.parametrize("j", range(1, 8))
    @pytest.mark.parametrize("eps", [0, -1])
    def test_dp_matches_enumeration(self, j, eps):
        assert attained_invariants(j, eps) == attained_by_enumeration(j, eps)

    def test_k_values(self):
        assert attained_invariants(3, 0).k_values == {3, 4, 5, 6, 7, 8, 9}


class TestAudits:
    def test_thm02(self):
        assert audit_theorem02(2, 0).holds and audit_theorem02(2, 0).missing == ()
        assert audit_theorem02(1, 0).holds
        r = audit_theorem02(3, 0)
        assert not r.holds
        assert set(r.missing) == {(1, 3), (4, 2), (5, 2), (6, 2)}
        assert r.extra == ()

    def test_thm02_json(self):
        d = audit_theorem02(3, 0).to_json()
        assert d["claimed"] == {"w": [2, 3], "z": [1, 6]}
        assert d["missing"] == [[1, 3], [4, 2], [5, 2], [6, 2]]
        assert d["holds"] is False

    @pytest.mark.parametrize("j, ks", [(1, {1}), (2, {2, 3, 4}), (3, set(range(3, 10)))])
    def test_thm05(self, j, ks):
        r = audit_theorem05(j)
        assert set(r.attained) == ks
        assert r.holds

    def test_prop04_j2(self):
        r = audit_prop04(2, 0)
        ii_iv, iii = r.parts
        assert ii_iv.holds
        assert set(iii.extra) == {"2,-2;2,-1;1,1", "2,-2;1,0;1,1"}
        assert not r.holds

    def test_prop04_j3(self):
        r = audit_prop04(3, 0)
        ii_iv, iii = r.parts
        assert ii_iv.holds and ii_iv.attained == (format_sequence(split_sequence(3, 0)),)
        assert len(iii.extra) == 4
        assert all(s.startswith("3,-3;3,-2;") for s in iii.extra)

    def test_prop04_j1(self):
        r = audit_prop04(1, 0)
        assert r.holds and all(p.holds for p in r.parts)

    def test_lemma11_eps0(self):
        for j in range(1, 7):
            r = audit_lemma11(j, 0)
            assert r.holds
            assert r.details["min_w"] == j - 1

    def test_lemma11_eps_minus_one_reports_z_zero(self):
        # the lower bound z >= 1 fails for epsilon = -1 (see (1,-2) -> (0,0))
        r = audit_lemma11(1, -1)
        assert not r.holds
        assert (0, 1) in r.extra

    def test_holds_definition(self):
        for r in [audit_theorem02(3, 0), audit_theorem05(4), audit_prop04(3, -1), audit_lemma11(2, -1)]:
            assert r.holds == (not r.missing and not r.extra)


# --- successor soundness / completeness -----------------------------------

@st.composite
def random_admissible(draw):
    j = draw(st.integers(1, 5))
    eps = draw(st.sampled_from([0, -1]))
    shift = draw(st.integers(-3, 3))
    rng = random.Random(draw(st.integers(0, 2**32)))
    p = P(j - shift, -j + eps - shift)
    pairs = [p]
    while not p.balanced:
        p = rng.choice(successors(p))
        pairs.append(p)
    return AdmissibleSequence(tuple(pairs))


@given(random_admissible())
def test_random_walk_validates(s):
    assert validate_sequence(s.pairs).valid


@given(st.integers(1, 5), st.sampled_from([0, -1]), st.data())
def test_valid_sequence_steps_are_successors(j, eps, data):
    # draw from the independent brute-force set, not from the DFS
    pool = sorted(brute_force_sequences(j, -j + eps))
    pairs = data.draw(st.sampled_from(pool))
    for p, q in zip(pairs, pairs[1:]):
        assert P(*q) in successors(P(*p))
