"""Brute-force object enumeration, signed counts, and parity helpers."""

import pytest

from overq.enumeration import (
    FAMILIES,
    Overpartition,
    OverpartitionPair,
    distinct_parts_difference,
    enumerate_family,
    family,
    is_sum_two_triangular,
    is_triangular,
    oracle_compare,
    pentagonal_rule,
    signed_count,
)


def _pair(first, second):
    return OverpartitionPair(first=first, second=second)


def test_single_family_members_weight_four():
    want = {
        Overpartition.of([4]),
        Overpartition.of([3, 1]),
        Overpartition.of([2], [2]),
        Overpartition.of([2, 1], [1]),
    }
    assert set(enumerate_family("F", 4)) == want


def test_pair_family_members_weight_three():
    got = enumerate_family("A", 3)
    assert len(got) == 4
    assert _pair(Overpartition.of([1]), Overpartition.of([2])) in got
    assert _pair(Overpartition.of([3]), Overpartition.of([])) in got


def test_pair_family_with_plain_seconds():
    got = enumerate_family("C", 3)
    assert len(got) == 5
    assert _pair(Overpartition.of([1], [1]), Overpartition.of([], [1])) in got


def test_two_triangular_family_sizes():
    assert enumerate_family("D", 1) == []
    assert len(enumerate_family("D", 4)) == 4
    assert len(enumerate_family("D", 5)) == 6


def test_enumeration_is_canonical():
    a = enumerate_family("B", 6)
    b = enumerate_family("B", 6)
    assert a == b
    assert a == sorted(a)
    assert len(set(a)) == len(a)


def test_signed_count_fixtures():
    assert signed_count("A", 3) == (3, 1, -2)
    assert signed_count("A2", 3) == (3, 1, 2)
    assert signed_count("D", 5) == (3, 3, 0)
    assert signed_count("D", 4) == (1, 3, -2)
    assert signed_count("F", 4) == (2, 2, 0)
    assert signed_count("B", 3) == (3, 2, 1)
    assert signed_count("C", 3) == (3, 2, -1)


def test_family_name_resolution():
    assert family("F'") is FAMILIES["F"]
    assert family("b'") is FAMILIES["B"]
    assert family("A''") is FAMILIES["A2"]
    assert family("A2") is FAMILIES["A2"]
    with pytest.raises(KeyError):
        family("E")
    with pytest.raises(ValueError):
        enumerate_family("F", -1)


def test_overpartition_validation():
    with pytest.raises(ValueError):
        Overpartition.of([0])
    with pytest.raises(ValueError):
        Overpartition.of([2, 2])  # overlined sizes must be distinct
    ok = Overpartition.of([2], [2, 2, 1])
    assert ok.weight == 7
    assert ok.total_parts == 4
    assert ok.overlined_parts == 1
    assert ok.plain_parts == 3
    assert ok.smallest() == 1


def test_render():
    assert Overpartition.of([]).render(False) == "()"
    assert Overpartition.of([]).render(True) == "∅"
    o = Overpartition.of([2, 1], [1])
    assert o.render(False) == "2~+1~+1"
    assert o.render(True) == "2̅+1̅+1"
    p = _pair(Overpartition.of([1]), Overpartition.of([]))
    assert p.render(False) == "(1~, ())"


def test_distinct_parts_difference_small_values():
    assert distinct_parts_difference(0) == 1
    assert distinct_parts_difference(4) == 0
    assert distinct_parts_difference(5) == 1


def test_distinct_parts_difference_matches_pentagonal_rule():
    for n in range(41):
        assert distinct_parts_difference(n) == pentagonal_rule(n), n


def test_triangular_predicates():
    assert is_triangular(0) and is_triangular(1) and is_triangular(3)
    assert not is_triangular(2) and not is_triangular(4)
    assert is_sum_two_triangular(4)
    assert not is_sum_two_triangular(5)
    assert is_sum_two_triangular(0)


def test_oracle_compare_smoke():
    rep = oracle_compare("F", 8)
    assert rep.ok
    with pytest.raises(ValueError):
        oracle_compare("F", 10, order=5)
