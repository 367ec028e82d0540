"""The two-variable story: a*x + b*y = n for coprime a and b.

Counts are given by a one-line formula; the interesting structure is in
which n are representable at all — the non-representable set, its size,
the largest gap (the Frobenius number), and the window where every n has
exactly one representation.
"""

from denumerant import (count2, frobenius2, nonrepresentable_count,
                        nonrepresentable_set, unique_window)

a, b = 7, 11
print(f"generators {{{a}, {b}}}")
print("  non-representable integers:", nonrepresentable_set(a, b))
print("  how many:", nonrepresentable_count(a, b),
      f"(formula (a-1)(b-1)/2 = {(a - 1) * (b - 1) // 2})")
print("  Frobenius number:", frobenius2(a, b),
      f"(formula ab-a-b = {a * b - a - b})")
lo, hi = unique_window(a, b)
print(f"  unique-representation window: [{lo}, {hi})")
print()

# Sanity: counts across the window boundary.
for n in (frobenius2(a, b), lo, hi - 1, hi):
    print(f"  count2({a},{b},{n}) = {count2(a, b, n)}")
print()

# A tiny census: count2 is 0/1 below the window, exactly 1 inside it,
# and at least 1 ever after.
bad = [n for n in range(1, a * b) if count2(a, b, n) == 0]
assert bad == nonrepresentable_set(a, b)
print("census agrees with the reachability sieve:", len(bad), "gaps")
