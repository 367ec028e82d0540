"""Evaluating S(b,c,a) = sum of floor(i*c/a) for i = 1..b in log time.

The engine behind the closed-form count is a reciprocity identity,
S(b,c,a) + S(K,a,c) = b*K with K = floor(b*c/a), alternated with a
division step that reduces the numerator.  Each query therefore shrinks
like the Euclidean algorithm, and the whole chain can be recorded,
rendered, and replayed.
"""

import time

from denumerant import (floor_sum_fast, floor_sum_naive, floor_sum_steps,
                        floor_sum_trace, lemma4_check)

# The identity itself, checked on one triple by brute force.
rep = lemma4_check(742, 129, 281)
print(f"reciprocity on (a,b,c)=(742,129,281): "
      f"{rep.lhs} = {rep.rhs} -> holds={rep.holds}")
print()

# The recorded chain for S(129, 281, 742).  RECIP lines apply the
# reciprocity identity (const = b*K), DIV lines split off the quotient
# (const = q*K*(K+1)/2), and BASE carries the folded total.
trace = floor_sum_trace(129, 281, 742)
print("reduction chain for S(129, 281, 742):")
print(trace.render())
print("replayed value:", trace.replay(), " steps:", trace.step_count)
print()

# Fast versus naive on a large query: the naive loop is linear in b,
# the chain is logarithmic in max(a, c).
b, a = 10 ** 7, 2 ** 61 - 1
c = 1_234_567_891_234_567_891
t0 = time.perf_counter()
fast = floor_sum_fast(b, c, a)
t_fast = time.perf_counter() - t0
t0 = time.perf_counter()
naive = floor_sum_naive(b, c, a)
t_naive = time.perf_counter() - t0
value, steps = floor_sum_steps(b, c, a)
assert fast == naive == value
print(f"S({b}, {c}, {a}) = {fast}")
print(f"  fast : {t_fast * 1e6:8.1f} us  ({steps} steps)")
print(f"  naive: {t_naive * 1e3:8.1f} ms  ({b} iterations)")
