from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from franklin.partitions import (
    BoxPartition,
    DistinctPartition,
    DurfeeCategory,
    NotInStaircaseForm,
    SignedMonomial,
    base_partition,
    count_distinct_signed,
    durfee,
    enumerate_distinct,
    format_partition,
    mu_decompose,
    parse_partition,
    weight,
)


def brute_distinct(total, m):
    """Oracle: subsets of {m+1, ..., total} summing to total."""
    universe = range(m + 1, total + 1)
    found = set()
    for r in range(total + 2):
        for combo in combinations(universe, r):
            if sum(combo) == total:
                found.add(tuple(sorted(combo, reverse=True)))
    return found


@st.composite
def distinct_parts(draw, m=0, max_part=30, max_n=8):
    universe = list(range(m + 1, max_part + 1))
    chosen = draw(st.sets(st.sampled_from(universe), max_size=max_n))
    return tuple(sorted(chosen, reverse=True))


class TestDistinctPartition:
    def test_valid_construction(self):
        p = DistinctPartition((14, 11, 9, 8, 6))
        assert p.n == 5
        assert p.size == 48
        assert p.min_part() == 6

    def test_empty(self):
        p = DistinctPartition()
        assert p.n == 0
        assert p.size == 0
        assert p.min_part() == 0

    @pytest.mark.parametrize("bad", [(5, 5), (3, 4), (2, 0), (1, -1), (0,)])
    def test_invalid_rejected(self, bad):
        with pytest.raises(ValueError):
            DistinctPartition(bad)

    def test_equality_and_hash(self):
        assert DistinctPartition((3, 1)) == DistinctPartition([3, 1])
        assert hash(DistinctPartition((3, 1))) == hash(DistinctPartition((3, 1)))
        assert DistinctPartition((3, 1)) != DistinctPartition((3, 2))


class TestParse:
    def test_typical_input(self):
        assert parse_partition("14,11,9,8,6").parts == (14, 11, 9, 8, 6)

    def test_empty_string(self):
        assert parse_partition("").n == 0
        assert parse_partition("  ").n == 0

    def test_not_strictly_decreasing(self):
        with pytest.raises(ValueError):
            parse_partition("5,5")

    @pytest.mark.parametrize("text", ["a,b", "3,x", "4,,2", "3.5"])
    def test_non_integer_token(self, text):
        with pytest.raises(ValueError, match="not an integer"):
            parse_partition(text)

    @pytest.mark.parametrize("text", ["3,0", "-1"])
    def test_nonpositive_part(self, text):
        with pytest.raises(ValueError):
            parse_partition(text)

    def test_whitespace_insignificant(self):
        assert parse_partition(" 5 , 3 ").parts == (5, 3)

    @given(distinct_parts())
    def test_roundtrip(self, parts):
        p = DistinctPartition(parts)
        assert parse_partition(format_partition(p)) == p


class TestWeight:
    def test_five_parts(self):
        assert weight(DistinctPartition((14, 11, 9, 8, 6))) == SignedMonomial(-1, 48)

    def test_empty(self):
        assert weight(DistinctPartition()) == SignedMonomial(1, 0)

    def test_size_fifty_fixed_point(self):
        assert weight(DistinctPartition((12, 11, 10, 9, 8))) == SignedMonomial(-1, 50)

    def test_sign_validation(self):
        with pytest.raises(ValueError):
            SignedMonomial(2, 0)
        with pytest.raises(ValueError):
            SignedMonomial(1, -3)


class TestDurfee:
    @pytest.mark.parametrize(
        "parts,dim,cat",
        [
            ((3, 2, 1), 2, DurfeeCategory.ONE),
            ((4, 3, 2), 2, DurfeeCategory.TWO),
            ((5,), 1, DurfeeCategory.ONE),
            ((), 0, DurfeeCategory.ONE),
            ((2, 1), 1, DurfeeCategory.TWO),
        ],
    )
    def test_examples(self, parts, dim, cat):
        info = durfee(DistinctPartition(parts))
        assert info.dimension == dim
        assert info.category == cat

    @given(distinct_parts())
    def test_against_definition(self, parts):
        info = durfee(DistinctPartition(parts))
        candidates = [i for i in range(1, len(parts) + 1) if parts[i - 1] >= i]
        assert info.dimension == (max(candidates) if candidates else 0)
        d = info.dimension
        expect_two = len(parts) > d and parts[d] == d
        assert (info.category == DurfeeCategory.TWO) == expect_two


class TestEnumerate:
    def test_five_no_bound(self):
        got = [p.parts for p in enumerate_distinct(5, 0)]
        assert got == [(5,), (4, 1), (3, 2)]

    def test_five_parts_above_two(self):
        assert [p.parts for p in enumerate_distinct(5, 2)] == [(5,)]

    def test_empty_stream(self):
        assert list(enumerate_distinct(1, 1)) == []

    def test_zero_size(self):
        assert [p.parts for p in enumerate_distinct(0, 3)] == [()]

    @pytest.mark.parametrize("m", [0, 1, 2, 3])
    @pytest.mark.parametrize("total", [0, 1, 7, 13, 20])
    def test_matches_subset_oracle(self, total, m):
        got = [p.parts for p in enumerate_distinct(total, m)]
        assert len(got) == len(set(got)), "duplicates in stream"
        assert set(got) == brute_distinct(total, m)
        assert got == sorted(got, reverse=True), "not decreasing lexicographic"

    @given(st.integers(0, 28), st.integers(0, 3))
    @settings(max_examples=40, deadline=None)
    def test_stream_invariants(self, total, m):
        for p in enumerate_distinct(total, m):
            assert p.size == total
            assert p.n == 0 or p.min_part() > m


class TestCountSigned:
    def test_small_pentagonal_values(self):
        table = count_distinct_signed(0, 12)
        assert table[5] == (3, 1)
        assert table[3][1] == 0
        assert table[12][1] == -1

    @pytest.mark.parametrize("m", [0, 1, 2, 3, 4])
    def test_matches_enumeration(self, m):
        table = count_distinct_signed(m, 40)
        for total in range(41):
            ps = list(enumerate_distinct(total, m))
            assert table[total][0] == len(ps)
            assert table[total][1] == sum(1 if p.n % 2 == 0 else -1 for p in ps)

    def test_pentagonal_support(self):
        table = count_distinct_signed(0, 120)
        pent = {k * (3 * k - 1) // 2 for k in range(-10, 11)}
        for total, (_, signed) in enumerate(table):
            assert signed in (-1, 0, 1)
            assert (signed != 0) == (total in pent)

    def test_headline_count_of_250(self):
        assert count_distinct_signed(10, 250)[250][0] == 31571191


class TestBasePartition:
    def test_two_parts(self):
        p = base_partition(2, 3)
        assert p.parts == (6, 5)
        assert p.size == 11

    def test_empty(self):
        assert base_partition(0, 7).n == 0

    def test_size_fifty(self):
        assert base_partition(5, 3).parts == (12, 11, 10, 9, 8)

    @given(st.integers(0, 12), st.integers(0, 6))
    def test_size_formula(self, n, m):
        assert base_partition(n, m).size == (3 * n * n - n) // 2 + n * m


class TestMuDecompose:
    def test_box_of_fours(self):
        mu = mu_decompose(DistinctPartition((14, 13, 12, 11)), 3)
        assert mu.parts == (4, 4, 4, 4)

    def test_base_gives_zero(self):
        mu = mu_decompose(DistinctPartition((12, 11, 10, 9, 8)), 3)
        assert mu.parts == (0, 0, 0, 0, 0)
        assert mu.size == 0

    def test_valid_small(self):
        assert mu_decompose(DistinctPartition((7, 6)), 3).parts == (1, 1)

    def test_negative_entry_rejected(self):
        with pytest.raises(NotInStaircaseForm):
            mu_decompose(DistinctPartition((6, 4)), 3)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            mu_decompose(DistinctPartition(), 0)

    @given(st.integers(1, 6), st.integers(0, 4), st.data())
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_from_box(self, n, m, data):
        # any weakly decreasing mu with mu_1 <= m + 1 recombines and decomposes
        mu = []
        hi = m + 1
        for _ in range(n):
            v = data.draw(st.integers(0, hi))
            mu.append(v)
            hi = v
        base = base_partition(n, m)
        combined = DistinctPartition(tuple(b + v for b, v in zip(base.parts, mu)))
        assert mu_decompose(combined, m).parts == tuple(mu)


class TestBoxPartition:
    def test_invariants(self):
        b = BoxPartition((3, 3, 1, 0), width=3)
        assert b.rows == 4
        assert b.size == 7

    def test_width_violation(self):
        with pytest.raises(ValueError):
            BoxPartition((4, 1), width=3)

    def test_weak_decrease_enforced(self):
        with pytest.raises(ValueError):
            BoxPartition((1, 2), width=3)

    def test_negative_entry(self):
        with pytest.raises(ValueError):
            BoxPartition((1, -1), width=3)
