from fractions import Fraction

import pytest

from degseq import (
    BadBoundsError,
    BadJError,
    BadKError,
    IncompleteTableError,
    binomial,
    block_count,
    count_bounded,
    count_even,
    count_regular,
    count_regular_n,
    count_zerofree_regular,
    expected_block_length,
    graphical_recurrence,
    rainbow_bounded_expectation,
    rainbow_bounded_variance,
    rainbow_count,
    rainbow_regular_expectation,
    rainbow_regular_variance,
)
from helpers import bounded_sequences, rainbow_stats, regular_sequences
from reference_data import R_E_RATIO


class TestBinomial:
    def test_small(self):
        assert binomial(5, 3) == 10
        assert binomial(4, 0) == 1
        assert binomial(3, 7) == 0

    def test_large_exact(self):
        assert binomial(2 * 38 - 1, 38) == 3446310324346630677300

    def test_negative_rejected(self):
        with pytest.raises(BadBoundsError):
            binomial(-1, 0)


class TestFamilyCounts:
    def test_bounded(self):
        assert count_bounded(0, 1, 3) == 8
        assert count_bounded(0, 0, 5) == 1
        assert count_bounded(1, 3, 2) == 9
        with pytest.raises(BadBoundsError):
            count_bounded(2, 1, 3)

    def test_regular(self):
        assert count_regular(0, 2, 3) == 10
        assert count_regular(0, 9, 10) == 92378
        # (2,2,2), (2,2,1), (2,1,1), (1,1,1)
        assert count_regular(1, 2, 3) == 4
        with pytest.raises(BadBoundsError):
            count_regular(3, 1, 2)

    def test_regular_n_anchors(self):
        assert count_regular_n(1) == 1
        assert count_regular_n(2) == 3
        assert count_regular_n(20) == 68923264410

    def test_zerofree(self):
        assert count_zerofree_regular(2) == 1
        assert count_zerofree_regular(3) == 4
        assert count_zerofree_regular(5) == 56
        with pytest.raises(BadBoundsError):
            count_zerofree_regular(1)

    def test_zerofree_matches_shifted_regular(self):
        for n in range(2, 20):
            assert count_zerofree_regular(n) == count_regular(1, n - 1, n)

    def test_zerofree_matches_enumeration(self):
        for n in range(2, 9):
            assert count_zerofree_regular(n) == sum(1 for _ in regular_sequences(n, lo=1))

    def test_even_anchors(self):
        assert count_even(4) == 19
        assert count_even(10) == 46252
        assert count_even(23) == 2058358034616

    def test_even_matches_enumeration(self):
        for n in range(1, 10):
            expected = sum(1 for s in regular_sequences(n) if sum(s) % 2 == 0)
            assert count_even(n) == expected

    def test_even_plus_odd_is_regular(self):
        for n in range(1, 40):
            assert count_even(n) <= count_regular_n(n)

    def test_published_table(self):
        for n, (r, e, _) in R_E_RATIO.items():
            assert count_regular_n(n) == r
            assert count_even(n) == e


class TestRainbow:
    def test_count_examples(self):
        assert rainbow_count(2, 2, 1) == 2
        assert rainbow_count(2, 2, 2) == 1
        assert rainbow_count(3, 3, 1) == 3
        with pytest.raises(BadKError):
            rainbow_count(3, 3, 4)

    def test_count_matches_enumeration(self):
        for n in range(1, 8):
            by_k = {}
            for s in regular_sequences(n):
                by_k[len(set(s))] = by_k.get(len(set(s)), 0) + 1
            for k, cnt in by_k.items():
                assert rainbow_count(n, n, k) == cnt, (n, k)

    def test_count_sums_to_regular(self):
        for n in range(1, 13):
            for m in range(1, 13):
                total = sum(rainbow_count(n, m, k) for k in range(1, min(n, m) + 1))
                assert total == count_regular(0, n - 1, m), (n, m)

    def test_regular_moments_exact(self):
        assert rainbow_regular_expectation(2) == Fraction(4, 3)
        assert rainbow_regular_expectation(1) == 1
        assert rainbow_regular_expectation(8) == Fraction(64, 15)
        assert rainbow_regular_variance(1) == 0
        assert rainbow_regular_variance(2) == Fraction(2, 9)
        assert rainbow_regular_variance(5) == Fraction(50, 81)

    def test_regular_moments_match_bruteforce(self):
        for n in range(1, 9):
            mean, var = rainbow_stats(list(regular_sequences(n)))
            assert rainbow_regular_expectation(n) == mean
            assert rainbow_regular_variance(n) == var

    def test_bounded_moments_exact(self):
        assert rainbow_bounded_expectation(1) == 1
        assert rainbow_bounded_expectation(2) == Fraction(3, 2)
        assert rainbow_bounded_expectation(3) == Fraction(19, 9)
        assert rainbow_bounded_variance(1) == 0
        assert rainbow_bounded_variance(2) == Fraction(1, 4)

    def test_bounded_moments_match_bruteforce(self):
        for n in range(1, 7):
            mean, var = rainbow_stats(list(bounded_sequences(n)))
            assert rainbow_bounded_expectation(n) == mean
            assert rainbow_bounded_variance(n) == var


class TestBlocks:
    def test_examples(self):
        assert block_count(4, 1) == 35
        assert block_count(3, 3) == 1
        assert block_count(2, 2) == 1
        with pytest.raises(BadJError):
            block_count(3, 0)

    def test_matches_enumeration(self):
        for n in range(1, 9):
            seqs = list(regular_sequences(n))
            for j in range(1, n + 1):
                expected = sum(1 for s in seqs if len(set(s)) >= j)
                assert block_count(n, j) == expected, (n, j)

    def test_expected_block_length_values(self):
        # ratio of counts one size apart, exact rationals
        assert expected_block_length(1, 1) == 1
        assert expected_block_length(2, 1) == Fraction(7, 3)
        n = 2
        assert expected_block_length(n, 1) == Fraction(block_count(3, 2), block_count(2, 1))

    def test_expected_block_length_tends_to_four(self):
        # monotone approach from below, never reaching 4
        prev = Fraction(0)
        for n in range(1, 201):
            val = expected_block_length(n, 1)
            assert prev < val < 4
            prev = val

    def test_diverges_from_empirical_mean(self):
        # the ratio is not the empirical first-block mean: for n = 2 the
        # mean multiplicity of the smallest value over {11, 10, 00} is 5/3
        seqs = list(regular_sequences(2))
        mean = Fraction(sum(s.count(min(s)) for s in seqs), len(seqs))
        assert mean == Fraction(5, 3)
        assert expected_block_length(2, 1) == Fraction(7, 3)


class TestRecurrence:
    def test_examples(self):
        assert graphical_recurrence({2: 1, 3: 2}) == {1: 1, 2: 2, 3: 4}
        assert graphical_recurrence({2: 0, 3: 0}) == {1: 1, 2: 1, 3: 1}
        assert graphical_recurrence({}) == {1: 1}

    def test_missing_entry(self):
        with pytest.raises(IncompleteTableError):
            graphical_recurrence({2: 1, 4: 5})
