from math import ceil, gcd, log2

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from denumerant.errors import InvalidInputError
from denumerant.floorsum import (DIV, RECIP, floor_sum_fast, floor_sum_generic,
                                 floor_sum_naive, floor_sum_steps,
                                 floor_sum_trace, lemma4_check)


def step_bound(a, c):
    return 2 * ceil(log2(max(a, c, 2))) + 4


def test_naive_examples():
    assert floor_sum_naive(129, 281, 742) == 3111
    assert floor_sum_naive(3, 1, 5) == 0
    assert floor_sum_naive(5, 5, 11) == 4


def test_fast_examples():
    assert floor_sum_fast(539, 621, 803) == 112277
    assert floor_sum_fast(335, 602, 663) == 50934
    assert floor_sum_fast(1, 5, 3) == 1


def test_fast_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        floor_sum_fast(3, 5, 0)
    with pytest.raises(InvalidInputError):
        floor_sum_fast(-1, 5, 3)


def test_degenerate_queries():
    assert floor_sum_fast(0, 17, 5) == 0
    assert floor_sum_fast(9, 0, 5) == 0
    assert floor_sum_fast(9, 4, 1) == 9 * 10 // 2 * 4


def test_exhaustive_agreement_small():
    # all a <= 40, b < a, c < a with gcd(a, c) = 1, plus non-coprime cases
    for a in range(1, 41):
        for c in range(0, a):
            for b in range(0, a):
                want = floor_sum_naive(b, c, a)
                assert floor_sum_fast(b, c, a) == want
                assert floor_sum_generic(b, c, a) == want


def test_wrapper_cases_b_and_c_large():
    for a in range(1, 15):
        for c in range(0, 40):
            for b in range(0, 40):
                assert floor_sum_fast(b, c, a) == floor_sum_naive(b, c, a)


@settings(max_examples=200)
@given(st.integers(1, 1 << 60), st.integers(0, 1 << 60), st.integers(0, 1 << 60))
def test_fast_matches_generic_random(a, b, c):
    assert floor_sum_fast(b, c, a) == floor_sum_generic(b, c, a)


@settings(max_examples=200)
@given(st.data())
def test_step_bound_random(data):
    a = data.draw(st.integers(2, 1 << 60))
    b = data.draw(st.integers(0, a - 1))
    c = data.draw(st.integers(0, a - 1))
    if gcd(a, c) != 1:
        c = 1
    value, steps = floor_sum_steps(b, c, a)
    assert value == floor_sum_generic(b, c, a)
    assert steps <= step_bound(a, c)


def test_trace_first_steps_worked_chain():
    t = floor_sum_trace(129, 281, 742)
    assert t.steps[0].kind == RECIP
    assert t.steps[0].param == 48
    assert t.steps[0].const == 6192
    assert t.steps[0].query == (48, 742, 281)
    assert t.steps[1].kind == DIV
    assert t.steps[1].param == 2
    assert t.steps[1].const == 2352
    assert t.steps[1].query == (48, 180, 281)
    assert t.value == 3111
    assert t.replay() == 3111


def test_trace_subchain_terminal():
    t = floor_sum_trace(3, 13, 22)
    assert [(s.kind, s.const) for s in t.steps] == [(RECIP, 3)]
    assert t.terminal_query == (1, 22, 13)
    assert t.terminal_value == 1
    assert t.value == 2


def test_trace_render_format():
    lines = floor_sum_trace(3, 13, 22).render().splitlines()
    assert lines == ["RECIP K=1 const=3", "BASE value=2"]


def test_trace_replay_and_bound_sweep():
    for a in range(2, 60):
        for c in range(1, a):
            if gcd(a, c) != 1:
                continue
            for b in range(0, a):
                t = floor_sum_trace(b, c, a)
                assert t.value == floor_sum_naive(b, c, a)
                assert t.replay() == t.value
                assert t.step_count <= step_bound(a, c)


def test_lemma4_examples():
    r = lemma4_check(3, 1, 2)
    assert r.holds and r.lhs == 0
    r = lemma4_check(5, 3, 4)
    assert r.holds and r.lhs == 6 and r.context["K"] == 2
    r = lemma4_check(742, 129, 281)
    assert r.holds and r.rhs == 6192


def test_lemma4_rejects_bad_input():
    with pytest.raises(InvalidInputError):
        lemma4_check(5, 5, 2)
    with pytest.raises(InvalidInputError):
        lemma4_check(6, 2, 3)
