import pytest

from bgrank import (
    AmbiguousSplitPoint,
    EPSILON,
    NoSplitPoint,
    NotABSequence,
    StrictPartition,
    alt_sum,
    parse_entries,
    shifted_column_profile,
    split_point,
    validate_ab,
)
from oracles import ab_sequences, iter_partitions


class TestAltSum:
    def test_fixtures(self):
        assert alt_sum((4, 5, 2, 1)) == 0
        assert alt_sum(()) == 0
        assert alt_sum((1, 2, 3, 4, 5, 4, 4, 2, 1)) == -2

    def test_sign_convention(self):
        # first entry is negated
        assert alt_sum((7,)) == -7
        assert alt_sum((7, 2)) == -5


class TestValidateAB:
    @pytest.mark.parametrize(
        "entries,a,b",
        [
            ((5, 6, 7, 8, 3, 3, 2, 2, 2, 1, 1), 4, 4),
            ((4, 5, 2, 1), 3, 2),
            ((1, 1), 0, 1),
            ((4, 5, 4, 4, 2, 1), 3, 2),
            ((3, 4, 5, 5, 4, 3, 2, 2, 2, 2), 2, 3),
            ((5, 6, 7, 8, 2, 1, 1), 4, 4),
        ],
    )
    def test_fixtures(self, entries, a, b):
        seq = validate_ab(entries)
        assert (seq.a, seq.b) == (a, b)
        assert seq.entries == entries
        assert seq.length == len(entries)
        assert seq.size == sum(entries)

    def test_rejects_nonzero_alt_sum(self):
        with pytest.raises(NotABSequence):
            validate_ab((1, 2))

    def test_rejects_rise_past_staircase(self):
        # alternating sum is zero but entries rise where they must not
        assert alt_sum((1, 1, 2, 2)) == 0
        with pytest.raises(NotABSequence):
            validate_ab((1, 1, 2, 2))

    def test_rejects_empty_and_nonpositive(self):
        with pytest.raises(NotABSequence):
            validate_ab(())
        with pytest.raises(NotABSequence):
            validate_ab((2, 3, 0, 1))

    def test_epsilon(self):
        assert not EPSILON
        assert EPSILON.length == 0
        assert EPSILON.size == 0

    def test_matches_brute_force_generation(self):
        # every brute-force (a,b)-sequence validates with the same a and b
        for a in range(4):
            for entries, b in ab_sequences(a, 18):
                seq = validate_ab(entries)
                assert (seq.a, seq.b) == (a, b)


class TestParseEntries:
    def test_round_trip(self):
        assert parse_entries("4,5,2,1") == (4, 5, 2, 1)
        assert parse_entries("") == ()


class TestSplitPoint:
    def test_showcase_splits(self):
        profile = shifted_column_profile(StrictPartition((9, 7, 5, 4, 1)))
        result = split_point(profile, 5)
        assert (result.m, result.staircase_weight) == (3, 6)
        assert result.tail.entries == (4, 5, 4, 4, 2, 1)

        profile = shifted_column_profile(StrictPartition((12, 11, 6, 4, 2)))
        result = split_point(profile, 5)
        assert (result.m, result.staircase_weight) == (2, 3)
        assert result.tail.entries == (3, 4, 5, 5, 4, 3, 2, 2, 2, 2)

    def test_small_split(self):
        result = split_point((1, 2, 1, 1), 2)
        assert (result.m, result.staircase_weight) == (2, 3)
        assert result.tail.entries == (1, 1)

    def test_pure_staircase(self):
        result = split_point((1, 2), 2)
        assert result.m == 2
        assert result.tail is EPSILON

    def test_no_split(self):
        with pytest.raises(NoSplitPoint):
            split_point((2, 1), 1)

    def test_ambiguous_split(self):
        with pytest.raises(AmbiguousSplitPoint):
            split_point((1, 1), 2)

    def test_exhaustive_properties(self):
        for n in range(31):
            for parts in iter_partitions(n, strict=True):
                d = StrictPartition(parts)
                result = split_point(shifted_column_profile(d), d.length)
                assert 0 <= result.m <= d.length
                assert result.staircase_weight + result.tail.size == d.size
                tail = result.tail
                if tail:
                    case1 = tail.a == result.m
                    case2 = tail.a <= result.m - 1 and tail.b == 1
                    assert case1 != case2  # exactly one image condition holds
