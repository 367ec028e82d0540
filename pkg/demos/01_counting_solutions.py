"""How many non-negative integer solutions does a*x + b*y + c*z = n have?

This walk-through counts solutions three independent ways — a closed
formula that runs in logarithmic time, a brute-force enumeration, and a
generating-function dynamic program — and shows how an instance with
common factors is first reduced to a pairwise-coprime one.
"""

from denumerant import (Instance3, count3, count3_oracle_dp,
                        count3_oracle_enum, reduce_pairwise)

# A small instance, counted three ways.  All three must agree; the two
# slow ways exist purely to keep the fast one honest.
a, b, c, n = 3, 5, 7, 100
res = count3(a, b, c, n)
print(f"{a}x + {b}y + {c}z = {n}")
print("  closed form :", res.count)
print("  enumeration :", count3_oracle_enum(a, b, c, n))
print("  dp oracle   :", count3_oracle_dp(a, b, c, n))
print()

# A large instance whose coefficients share pairwise factors.  The
# pipeline reduces it to a pairwise-coprime equation with a recorded,
# replayable witness, then applies the closed form.
inst = Instance3(4452, 8030, 9945, 3857942)
w = reduce_pairwise(inst)
r = w.reduced
print(f"{inst.a}x + {inst.b}y + {inst.c}z = {inst.n}")
print(f"  pairwise gcds (g1,g2,g3) = ({w.g1},{w.g2},{w.g3})")
print(f"  forced residues (n1,n2,n3) = ({w.n1},{w.n2},{w.n3})")
print(f"  reduced instance: {r.a}x + {r.b}y + {r.c}z = {r.n}")
res = count3(inst.a, inst.b, inst.c, inst.n)
print("  count (closed form on the reduced instance):", res.count)
print("  count (dp oracle on the original)          :",
      count3_oracle_dp(inst.a, inst.b, inst.c, inst.n))
print()

# The closed form exposes its internal floor sums; for the reduced
# instance above they are the three sums the trace demo replays.
print("floor sums inside the closed form:", res.floor_sums)
