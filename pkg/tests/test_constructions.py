"""Regime classification and the four cycle builders."""

from __future__ import annotations

import pytest

from graycycles import (
    BINARY,
    CapacityError,
    Case,
    ParameterError,
    Parity,
    Word,
    build_even,
    build_nonbinary,
    build_odd_pair,
    classify,
    complement_pair,
    gamma_base,
    hamming_distance,
    max_cycle_length,
    max_gray_cycle,
    odd_pair_levels,
    ones_parity,
    rho_base,
)
from conftest import texts, w


class TestClassify:
    @pytest.mark.parametrize(
        "p,n,k,case",
        [
            (3, 4, 2, Case.NONBINARY),
            (3, 2, 2, Case.NONBINARY),  # n = k stays regime i off the binary alphabet
            (5, 1, 1, Case.NONBINARY),
            (2, 5, 5, Case.BINARY_COMPLEMENT),
            (2, 1, 1, Case.BINARY_COMPLEMENT),
            (2, 4, 4, Case.BINARY_COMPLEMENT),
            (2, 5, 3, Case.BINARY_ODD),
            (2, 2, 1, Case.BINARY_ODD),
            (2, 5, 2, Case.BINARY_EVEN),
            (2, 12, 10, Case.BINARY_EVEN),
        ],
    )
    def test_unique_regime(self, p, n, k, case):
        assert classify(p, n, k).case is case

    def test_parity_only_in_regime_iv(self):
        assert classify(2, 5, 2).parity_class is Parity.EVEN
        assert classify(2, 5, 2, "odd").parity_class is Parity.ODD
        assert classify(3, 4, 2).parity_class is None
        with pytest.raises(ParameterError):
            classify(2, 5, 3, Parity.ODD)
        with pytest.raises(ParameterError):
            classify(3, 4, 2, "even")

    def test_rejects_bad_triples(self):
        with pytest.raises(ParameterError):
            classify(2, 2, 3)  # n < k
        with pytest.raises(ParameterError):
            classify(1, 2, 1)
        with pytest.raises(ParameterError):
            classify(3, 3, 0)


class TestMaxCycleLength:
    @pytest.mark.parametrize(
        "p,n,k,value",
        [
            (3, 4, 2, 81),
            (4, 3, 3, 64),
            (2, 7, 7, 2),
            (2, 5, 3, 32),
            (2, 5, 2, 16),
            (2, 12, 10, 2048),
            (2, 2, 1, 4),
            (3, 2, 2, 9),
        ],
    )
    def test_closed_form(self, p, n, k, value):
        assert max_cycle_length(p, n, k) == value

    def test_capacity_guard(self):
        with pytest.raises(CapacityError):
            max_cycle_length(2, 64, 1)
        with pytest.raises(CapacityError):
            max_cycle_length(2, 64, 64)  # guarded even though the answer would be 2


class TestBuildNonbinary:
    def test_ternary_distance_two(self):
        seq = build_nonbinary(3, 3, 2)
        assert seq.as_texts()[:9] == [
            "000", "101", "202", "012", "110", "211", "021", "122", "220",
        ]
        assert seq.as_texts()[9:18] == [
            "100", "201", "002", "112", "210", "011", "121", "222", "020",
        ]

    def test_distance_one_is_the_reflected_cycle(self):
        assert build_nonbinary(3, 1, 1).as_texts() == ["0", "1", "2"]
        from graycycles import p_ary_reflected

        assert build_nonbinary(4, 3, 1).as_texts() == p_ary_reflected(4, 3).as_texts()

    def test_rejects_binary(self):
        with pytest.raises(ParameterError):
            build_nonbinary(2, 4, 2)

    def test_rejects_k_beyond_n(self):
        with pytest.raises(ParameterError):
            build_nonbinary(3, 2, 3)

    @pytest.mark.parametrize(
        "p,n,k",
        [(p, n, k) for p in (3, 4) for n in range(1, 7) for k in range(2, n + 1) if p**n <= 1024],
    )
    def test_block_boundary_steps_have_distance_k(self, p, n, k):
        # the seam between consecutive fixed-prefix blocks is where the
        # two-place prefix jump happens; it must still be a distance-k step
        seq = build_nonbinary(p, n, k)
        block = p ** (n - 1)
        for q in range(1, p):
            assert hamming_distance(seq[q * block - 1], seq[q * block]) == k
        assert hamming_distance(seq[-1], seq[0]) == k

    def test_same_offset_terms_differ_only_in_first_character(self):
        p, n, k = 3, 4, 3
        seq = build_nonbinary(p, n, k)
        block = p ** (n - 1)
        for r in (0, 1, 7, block - 1):
            for q in range(1, p):
                a, b = seq[r], seq[q * block + r]
                assert a.chars[1:] == b.chars[1:]
                assert a.chars[0] != b.chars[0]


class TestBuildOddPair:
    def test_distance_three_gamma(self):
        gamma = build_odd_pair(5, 3).gamma
        assert gamma.as_texts()[:8] == [
            "00000", "11100", "00101", "11111", "00110", "11010", "00011", "11001",
        ]
        assert gamma.as_texts()[8:16] == [
            "01100", "10000", "01001", "10011", "01010", "10110", "01111", "10101",
        ]

    def test_zero_steps_returns_the_base_pair(self):
        pair = build_odd_pair(3, 1)
        assert pair.gamma.as_texts() == gamma_base(3).as_texts()
        assert pair.rho.as_texts() == rho_base(3).as_texts()

    def test_rejects_even_k_and_tight_n(self):
        with pytest.raises(ParameterError):
            build_odd_pair(5, 2)
        with pytest.raises(ParameterError):
            build_odd_pair(3, 3)  # needs n >= k+1

    @pytest.mark.parametrize("n,k", [(4, 3), (5, 3), (7, 5), (8, 7)])
    def test_levels_interlock(self, n, k):
        # the endpoints exchange exactly one more position than the level's
        # step distance, at every level
        for pair in odd_pair_levels(n, k):
            gamma, rho = pair
            assert gamma.k == rho.k
            assert hamming_distance(gamma[0], rho[-1]) == gamma.k + 1
            assert hamming_distance(rho[0], gamma[-1]) == gamma.k + 1

    @pytest.mark.parametrize("n,k", [(2, 1), (4, 3), (5, 3), (6, 5), (7, 5)])
    def test_both_components_cover_everything(self, n, k):
        pair = build_odd_pair(n, k)
        for seq in pair:
            assert len(seq) == 2**n
            assert len(set(seq.terms)) == 2**n
            for i in range(len(seq)):
                assert hamming_distance(seq[i - 1], seq[i]) == k


class TestBuildEven:
    def test_smallest_instance(self):
        assert build_even(3, 2).as_texts() == ["000", "110", "011", "101"]

    def test_parity_anchor(self):
        even = build_even(6, 4)
        odd = build_even(6, 4, Parity.ODD)
        assert even.as_texts()[0] == "000000"
        assert even.as_texts()[1] == "111100"
        assert odd.as_texts()[0] == "100000"

    @pytest.mark.parametrize("n,k", [(3, 2), (5, 2), (5, 4), (7, 6), (9, 4)])
    def test_covers_exactly_one_class(self, n, k):
        for parity in (Parity.EVEN, Parity.ODD):
            seq = build_even(n, k, parity)
            assert len(seq) == 2 ** (n - 1)
            assert len(set(seq.terms)) == 2 ** (n - 1)
            assert all(ones_parity(word) is parity for word in seq)
            for i in range(len(seq)):
                assert hamming_distance(seq[i - 1], seq[i]) == k

    def test_rejects_odd_k_and_tight_n(self):
        with pytest.raises(ParameterError):
            build_even(5, 3)
        with pytest.raises(ParameterError):
            build_even(4, 4)


class TestComplementPair:
    def test_examples(self):
        assert complement_pair(w("000")).as_texts() == ["000", "111"]
        assert complement_pair(w("10")).as_texts() == ["10", "01"]
        assert complement_pair(w("0")).as_texts() == ["0", "1"]

    def test_rejects_nonbinary_and_empty(self):
        with pytest.raises(ParameterError):
            complement_pair(w("012", p=3))
        with pytest.raises(ParameterError):
            complement_pair(Word(BINARY, ()))


class TestDispatcher:
    def test_dispatch_targets(self):
        assert max_gray_cycle(3, 3, 2).as_texts() == build_nonbinary(3, 3, 2).as_texts()
        assert max_gray_cycle(2, 4, 4).as_texts() == ["0000", "1111"]
        assert max_gray_cycle(2, 5, 3).as_texts() == build_odd_pair(5, 3).gamma.as_texts()
        assert max_gray_cycle(2, 5, 2, "odd").as_texts() == build_even(5, 2, "odd").as_texts()

    @pytest.mark.parametrize(
        "p,n,k",
        [(2, n, k) for n in range(1, 9) for k in range(1, n + 1)]
        + [(3, n, k) for n in range(1, 5) for k in range(1, n + 1)],
    )
    def test_length_matches_closed_form(self, p, n, k):
        assert len(max_gray_cycle(p, n, k)) == max_cycle_length(p, n, k)

    def test_capacity_guard_applies_to_every_regime(self):
        with pytest.raises(CapacityError):
            max_gray_cycle(2, 64, 64)
