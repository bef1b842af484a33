import pytest
from hypothesis import given
from hypothesis import strategies as st

from degseq import (
    DegreeSequence,
    LengthMismatchError,
    NotMonotoneError,
    OutOfBoundsError,
    checkpoints,
    make_sequence,
    prefix_profile,
    strip_zeros,
    weight_points,
)
from helpers import regular_sequences, weight_oracle


def sorted_sequences(max_n=8):
    return st.integers(min_value=1, max_value=max_n).flatmap(
        lambda n: st.lists(
            st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n
        ).map(lambda vs: tuple(sorted(vs, reverse=True)))
    )


class TestMakeSequence:
    def test_accepts_valid(self):
        seq = make_sequence([3, 3, 2, 2], 4)
        assert seq.values == (3, 3, 2, 2)
        assert seq.n == 4

    def test_accepts_all_zero(self):
        assert make_sequence([0, 0, 0], 3).values == (0, 0, 0)

    def test_rejects_non_monotone(self):
        with pytest.raises(NotMonotoneError):
            make_sequence([2, 3, 1], 3)

    def test_rejects_out_of_bounds(self):
        with pytest.raises(OutOfBoundsError):
            make_sequence([3, 1, 1], 3)
        with pytest.raises(OutOfBoundsError):
            make_sequence([1, 0, -1], 3)

    def test_rejects_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            make_sequence([1, 1], 3)
        with pytest.raises(LengthMismatchError):
            make_sequence([])


class TestPrefixProfile:
    @pytest.mark.parametrize(
        "values,expected",
        [((2, 2, 2), (0, 2, 4, 6)), ((3, 3, 2, 2), (0, 3, 6, 8, 10)), ((0, 0, 0), (0, 0, 0, 0))],
    )
    def test_examples(self, values, expected):
        assert prefix_profile(make_sequence(values)).h == expected

    def test_tail_is_derived(self):
        p = prefix_profile(make_sequence((3, 3, 2, 2)))
        assert p.total == 10
        assert [p.tail(i) for i in range(5)] == [10, 7, 4, 2, 0]

    def test_total_bounded(self):
        for n in range(1, 7):
            for values in regular_sequences(n):
                assert prefix_profile(make_sequence(values)).total <= n * (n - 1)


class TestWeightPoints:
    @pytest.mark.parametrize(
        "values,expected",
        [((3, 3, 2, 2), (4, 4, 2)), ((1, 1, 1, 1), (4, 0, 0)), ((0, 0, 0), (0, 0))],
    )
    def test_examples(self, values, expected):
        assert weight_points(make_sequence(values)).w == expected

    def test_requires_two_elements(self):
        with pytest.raises(LengthMismatchError):
            weight_points(make_sequence((0,)))

    def test_matches_bruteforce_scan(self):
        for n in range(2, 8):
            for values in regular_sequences(n):
                w = weight_points(make_sequence(values))
                for i in range(1, n):
                    assert w.at(i) == weight_oracle(values, i), (values, i)

    @given(sorted_sequences())
    def test_duality(self, values):
        # b_k >= i  <=>  k <= w_i
        n = len(values)
        if n < 2:
            return
        w = weight_points(DegreeSequence(values))
        for i in range(1, n):
            for k in range(1, n + 1):
                assert (values[k - 1] >= i) == (k <= w.at(i))


class TestCheckpoints:
    @pytest.mark.parametrize(
        "values,expected",
        [((3, 3, 2, 2), (2, 4)), ((2, 2, 2), (3,)), ((4, 3, 2, 1, 0), (1, 2, 3, 4, 5))],
    )
    def test_examples(self, values, expected):
        assert checkpoints(make_sequence(values)).indices == expected

    @given(sorted_sequences())
    def test_count_equals_distinct_values(self, values):
        assert checkpoints(DegreeSequence(values)).q == len(set(values))

    def test_ends_with_n(self):
        for n in range(1, 7):
            for values in regular_sequences(n):
                assert checkpoints(make_sequence(values)).indices[-1] == n


class TestStripZeros:
    def test_drops_trailing_zeros(self):
        assert strip_zeros(make_sequence((2, 1, 1, 0, 0))).values == (2, 1, 1)

    def test_all_zero_collapses(self):
        assert strip_zeros(make_sequence((0, 0, 0, 0))).values == (0,)

    def test_zerofree_unchanged(self):
        assert strip_zeros(make_sequence((3, 3, 2, 2))).values == (3, 3, 2, 2)

    def test_invalid_core_raises(self):
        # (3,3,3,0) strips to (3,3,3), impossible on three vertices
        with pytest.raises(OutOfBoundsError):
            strip_zeros(make_sequence((3, 3, 3, 0)))
