from fractions import Fraction

import pytest

from indexing import (
    InvalidIndexError,
    Kind,
    MultiIndex,
    format_rational,
    indices_of_weight,
    multi_binomial,
    multinomial,
    parse_index_spec,
    parse_rational,
    split_enumerate,
    weight_stats,
)


def s0(**entries) -> MultiIndex:
    return MultiIndex.from_mapping(Kind.S0, {int(k[1:]): v for k, v in entries.items()})


def test_canonical_form_drops_zeros_and_sorts():
    m = MultiIndex.from_mapping(Kind.S0, {2: 1, 0: 3, 1: 0})
    assert m.entries == ((0, 3), (2, 1))
    assert m == MultiIndex.from_points(Kind.S0, [2, 0, 0, 0])


def test_kappa_index_cannot_sit_at_zero():
    with pytest.raises(InvalidIndexError):
        MultiIndex.delta(Kind.S1, 0)


def test_negative_multiplicity_rejected():
    with pytest.raises(InvalidIndexError):
        MultiIndex.from_mapping(Kind.S0, {1: -1})


def test_subtraction_below_zero_rejected():
    with pytest.raises(InvalidIndexError):
        s0(i0=1).minus(0, 2)


def test_weight_stats():
    stats = weight_stats(s0(i0=2, i2=1))
    assert stats.weighted_degree == 2
    assert stats.total_count == 3
    assert stats.factorial_product == 2


@pytest.mark.parametrize("m,l,expected", [
    ({0: 3, 1: 1}, {0: 2}, 3),
    ({0: 3, 1: 1}, {0: 3, 1: 1}, 1),
    ({0: 1}, {0: 2}, 0),
    ({0: 2, 1: 2}, {0: 1, 1: 1}, 4),
])
def test_multi_binomial(m, l, expected):
    assert multi_binomial(MultiIndex.from_mapping(Kind.S0, m), MultiIndex.from_mapping(Kind.S0, l)) == expected


def test_multi_binomial_kind_mismatch():
    with pytest.raises(InvalidIndexError):
        multi_binomial(s0(i1=1), MultiIndex.delta(Kind.S1, 1))


def test_split_enumerate_counts_and_order():
    m = s0(i0=2, i1=1, i3=2)
    splits = list(split_enumerate(m))
    assert len(splits) == 3 * 2 * 3
    first, second, coefficient = splits[0]
    assert first.is_zero() and second == m and coefficient == 1
    assert sum(c for _, _, c in splits) == 2 ** 5
    for a, b, c in splits:
        assert a + b == m
        assert c == multi_binomial(m, a)
    chosen = [tuple(a.get(i) for i in m.positions) for a, _, _ in splits]
    assert chosen == sorted(chosen)
    assert len(set(chosen)) == len(chosen)


@pytest.mark.parametrize("k", range(13))
def test_split_row_sums_are_powers_of_two(k):
    m = MultiIndex.delta(Kind.S0, 0, k)
    splits = list(split_enumerate(m))
    assert [a.get(0) for a, _, _ in splits] == list(range(k + 1))
    assert sum(c for _, _, c in splits) == 2 ** k


def test_split_of_zero_index():
    splits = list(split_enumerate(MultiIndex.zero(Kind.S1)))
    assert len(splits) == 1
    assert splits[0][2] == 1


def test_parse_index_spec():
    m = parse_index_spec("0:3,1:1", Kind.S0)
    assert m == s0(i0=3, i1=1)
    assert m.to_text() == "0:3,1:1"
    assert parse_index_spec("2", Kind.S1) == MultiIndex.delta(Kind.S1, 2)
    assert parse_index_spec("", Kind.S0).is_zero()


@pytest.mark.parametrize("text", ["a:b", "1:-1", "0:1:2"])
def test_parse_index_spec_rejects(text):
    with pytest.raises(InvalidIndexError):
        parse_index_spec(text, Kind.S0)


def test_indices_of_weight_are_partitions():
    found = list(indices_of_weight(Kind.S1, 4, range(1, 5)))
    assert len(found) == 5
    assert all(p.weighted_degree == 4 for p in found)
    assert list(indices_of_weight(Kind.S1, 0, ())) == [MultiIndex.zero(Kind.S1)]
    assert list(indices_of_weight(Kind.S1, 3, (2,))) == []


def test_indices_of_weight_rejects_position_zero():
    with pytest.raises(InvalidIndexError):
        list(indices_of_weight(Kind.S0, 2, (0, 1)))


def test_rationals():
    assert format_rational(Fraction(1, 8)) == "1/8"
    assert format_rational(Fraction(6, 2)) == "3"
    assert parse_rational(" -2/4 ") == Fraction(-1, 2)
    assert multinomial([2, 1]) == 3
    assert multinomial([1, -1]) == 0
    with pytest.raises(InvalidIndexError):
        parse_rational("1/0")
