from itertools import permutations
from math import gcd

import pytest

from denumerant.counting import (count3, count3_closed, count3_oracle_dp,
                                 count3_oracle_enum, dp_counts_upto,
                                 theorem_symbols)
from denumerant.errors import InvalidInputError, ResourceLimitError


def test_symbols_small():
    s = theorem_symbols(2, 3, 5, 10)
    assert (s.b1p, s.c1p, s.c2p, s.a2p, s.a3p, s.b3p) == (2, 1, 1, 1, 5, 4)
    assert s.N1 == 0


def test_symbols_n_zero():
    s = theorem_symbols(2, 3, 5, 0)
    assert (s.b1p, s.c2p, s.a3p) == (2, 3, 5)
    assert s.N1 == -180


def test_symbols_worked_instance():
    s = theorem_symbols(742, 803, 663, 128598)
    assert (s.b1p, s.c1p, s.c2p, s.a2p, s.a3p, s.b3p) == \
        (130, 281, 540, 621, 336, 602)


def test_symbols_reject_non_coprime():
    with pytest.raises(InvalidInputError):
        theorem_symbols(2, 4, 5, 10)


def test_closed_examples():
    assert count3_closed(742, 803, 663, 128598).count == 22
    res = count3_closed(2, 3, 5, 10)
    assert res.count == 4
    assert res.floor_sums == (0, 0, 6)
    assert count3_closed(2, 3, 5, 0).count == 1
    assert count3_closed(1, 1, 1, 4).count == 15


def test_pipeline_examples():
    assert count3(2, 4, 6, 7).count == 0
    assert count3(3, 5, 7, 10).count == 2
    assert count3(6, 10, 15, 1).count == 0


def test_pipeline_worked_original_matches_dp():
    res = count3(4452, 8030, 9945, 3857942)
    assert res.witness.reduced.n == 128182
    assert res.count == 20


def test_oracles_small():
    assert count3_oracle_enum(2, 3, 5, 10) == 4
    assert count3_oracle_dp(2, 3, 5, 10) == 4
    assert count3_oracle_enum(1, 1, 1, 4) == 15
    assert count3_oracle_dp(7, 11, 13, 0) == 1


def test_oracle_z_determined_case():
    # with c = 1, z is forced: count equals lattice points under px+qy <= m
    p, q, m = 3, 5, 29
    direct = sum(1 for x in range(m // p + 1) for y in range((m - p * x) // q + 1))
    assert count3_oracle_enum(p, q, 1, m) == direct


def test_oracle_budget():
    with pytest.raises(ResourceLimitError):
        count3_oracle_enum(1, 1, 1, 10 ** 9, budget=10 ** 6)
    with pytest.raises(ResourceLimitError):
        count3_oracle_dp(1, 1, 1, 10 ** 9)


def test_oracle_equivalence_small_sweep():
    triples = [(a, b, c)
               for a in range(1, 11) for b in range(a, 11) for c in range(b, 11)
               if gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(c, a) == 1]
    for a, b, c in triples:
        dp = dp_counts_upto(a, b, c, 120)
        for n in range(0, 121, 7):
            want = dp[n]
            assert count3_closed(a, b, c, n).count == want
            assert count3_oracle_enum(a, b, c, n) == want


def test_pipeline_matches_enum_including_non_coprime():
    for a in range(1, 9):
        for b in range(1, 9):
            for c in range(1, 9):
                for n in (0, 5, 17, 60):
                    assert count3(a, b, c, n).count == \
                        count3_oracle_enum(a, b, c, n)


def test_symmetry():
    for triple in [(2, 3, 5), (4, 9, 25), (6, 10, 15), (742, 803, 663)]:
        n = 1234
        counts = {count3(*perm, n).count for perm in permutations(triple)}
        assert len(counts) == 1


def test_step_counts_populated():
    res = count3_closed(742, 803, 663, 128598)
    assert res.floor_sum_steps is not None
    assert all(k >= 0 for k in res.floor_sum_steps)
