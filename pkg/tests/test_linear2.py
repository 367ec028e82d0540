from math import gcd

import pytest

from denumerant.errors import InvalidInputError
from denumerant.linear2 import (count2, frobenius2, nonrepresentable_count,
                                nonrepresentable_set, unique_window)


def count2_brute(a, b, n):
    return sum((n - a * x) % b == 0 for x in range(n // a + 1))


def test_count2_examples():
    assert count2(3, 5, 8) == 1
    assert count2(3, 5, 7) == 0
    assert count2(3, 5, 15) == 2
    assert count2(2, 3, 1) == 0
    assert count2(1, 1, 9) == 10


def test_count2_gcd_normalization():
    assert count2(2, 4, 7) == 0
    assert count2(2, 4, 8) == count2(1, 2, 4)


def test_count2_matches_enumeration():
    for a in range(1, 26):
        for b in range(a, 26):
            if gcd(a, b) != 1:
                continue
            for n in range(0, 200):
                assert count2(a, b, n) == count2_brute(a, b, n)


def test_count2_tightness():
    for a, b in [(3, 5), (7, 11), (13, 30)]:
        for n in range(0, 4 * a * b):
            assert abs(count2(a, b, n) - n / (a * b)) <= 1


def test_unique_window_examples():
    assert unique_window(3, 5) == (8, 15)
    assert unique_window(2, 3) == (2, 6)
    with pytest.raises(InvalidInputError):
        unique_window(4, 1)
    with pytest.raises(InvalidInputError):
        unique_window(4, 6)


def test_window_law_and_frobenius():
    for a in range(2, 21):
        for b in range(a + 1, 21):
            if gcd(a, b) != 1:
                continue
            lo, hi = unique_window(a, b)
            for n in range(lo, hi):
                assert count2(a, b, n) == 1
            f = frobenius2(a, b)
            assert f == a * b - a - b
            assert count2(a, b, f) == 0
            assert all(count2(a, b, n) >= 1 for n in range(f + 1, f + 1 + a * b))


def test_frobenius_examples():
    assert frobenius2(3, 5) == 7
    assert frobenius2(2, 3) == 1
    assert frobenius2(2, 5) == 3


def test_nonrepresentable_examples():
    assert nonrepresentable_set(3, 5) == [1, 2, 4, 7]
    assert nonrepresentable_set(2, 3) == [1]
    assert nonrepresentable_set(1, 7) == []
    assert nonrepresentable_count(3, 5) == 4
    assert nonrepresentable_count(3, 7) == 6
    assert nonrepresentable_count(2, 3) == 1
    assert nonrepresentable_set(3, 7) == [1, 2, 4, 5, 8, 11]


def test_nonrepresentable_set_is_count2_zero_set():
    for p, q in [(2, 5), (3, 8), (4, 9), (5, 7), (6, 25)]:
        zeros = [n for n in range(1, p * q + 1) if count2(p, q, n) == 0]
        assert nonrepresentable_set(p, q) == zeros


def test_sylvester_count_matches_set():
    for p in range(2, 30):
        for q in range(p + 1, 30):
            if gcd(p, q) == 1:
                assert len(nonrepresentable_set(p, q)) == \
                    nonrepresentable_count(p, q)


def test_sn_structure_for_lemma6():
    # for distinct odd primes: count is 0/1 up to (p-1)(q-1), exactly 1 after
    for p, q in [(3, 5), (3, 7), (5, 7), (5, 11)]:
        cut = (p - 1) * (q - 1)
        for n in range(1, cut + 1):
            assert count2(p, q, n) in (0, 1)
        for n in range(cut + 1, p * q):
            assert count2(p, q, n) == 1
