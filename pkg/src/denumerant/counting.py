"""Counting non-negative solutions of a*x + b*y + c*z = n.

count3_closed evaluates the closed form for pairwise-coprime coefficients:

    count = N1/(2abc) + S(b1'-1, c1', a) + S(c2'-1, a2', b) + S(a3'-1, b3', c) - 2

where the six primed symbols are one-based residues (see theorem_symbols)
and N1 is an exact polynomial in all of them.  count3 wires the full
pipeline: divide out gcd(a,b,c), reduce to the pairwise-coprime case, then
apply the closed form.  Two independent oracles (brute-force enumeration and
a generating-function coefficient extraction) are provided for verification.
"""

import os
from dataclasses import dataclass, replace
from math import gcd

from denumerant.errors import (CrossCheckError, InvalidInputError,
                               ResourceLimitError)
from denumerant.exact import mod_inverse, residue_one_based
from denumerant.floorsum import floor_sum_steps
from denumerant.reduction import (Instance3, ReductionWitness, normalize_gcd,
                                  reduce_pairwise)

DP_BUDGET = 10 ** 8


def _oracle_budget():
    return int(os.environ.get("DENUM_ORACLE_BUDGET", 10 ** 9))


def _require_pairwise_coprime(a, b, c):
    if a < 1 or b < 1 or c < 1:
        raise InvalidInputError("coefficients must be >= 1")
    if gcd(a, b) != 1 or gcd(b, c) != 1 or gcd(c, a) != 1:
        raise InvalidInputError("coefficients must be pairwise coprime")


@dataclass(frozen=True)
class TheoremSymbols:
    """The six one-based residues of the closed form, plus N1.

    b1p = -n*b^-1 (mod a), c1p = b*c^-1 (mod a), c2p = -n*c^-1 (mod b),
    a2p = c*a^-1 (mod b), a3p = -n*a^-1 (mod c), b3p = a*b^-1 (mod c),
    each normalized into [1, modulus].  N1 may be negative.
    """

    b1p: int
    c1p: int
    c2p: int
    a2p: int
    a3p: int
    b3p: int
    N1: int


@dataclass(frozen=True)
class CountResult:
    count: int
    witness: ReductionWitness | None = None
    symbols: TheoremSymbols | None = None
    floor_sums: tuple | None = None
    floor_sum_steps: tuple | None = None


def theorem_symbols(a, b, c, n):
    """Compute the primed residues and N1 for a pairwise-coprime instance."""
    _require_pairwise_coprime(a, b, c)
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    b1p = residue_one_based(-n * mod_inverse(b, a), a)
    c1p = residue_one_based(b * mod_inverse(c, a), a)
    c2p = residue_one_based(-n * mod_inverse(c, b), b)
    a2p = residue_one_based(c * mod_inverse(a, b), b)
    a3p = residue_one_based(-n * mod_inverse(a, c), c)
    b3p = residue_one_based(a * mod_inverse(b, c), c)
    N1 = (n * (n + a + b + c)
          + c * b * b1p * (a + 1 - c1p * (b1p - 1))
          + a * c * c2p * (b + 1 - a2p * (c2p - 1))
          + b * a * a3p * (c + 1 - b3p * (a3p - 1)))
    return TheoremSymbols(b1p, c1p, c2p, a2p, a3p, b3p, N1)


def count3_closed(a, b, c, n, witness=None):
    """Closed-form count for pairwise-coprime a, b, c.

    The division N1/(2abc) must be exact and the result non-negative; both
    are asserted, and a failure means a bug, never user error.
    """
    sym = theorem_symbols(a, b, c, n)
    s1, k1 = floor_sum_steps(sym.b1p - 1, sym.c1p, a)
    s2, k2 = floor_sum_steps(sym.c2p - 1, sym.a2p, b)
    s3, k3 = floor_sum_steps(sym.a3p - 1, sym.b3p, c)
    num = sym.N1
    if num % (2 * a * b * c) != 0:
        raise CrossCheckError(f"N1 not divisible by 2abc for {(a, b, c, n)}")
    count = num // (2 * a * b * c) + s1 + s2 + s3 - 2
    if count < 0:
        raise CrossCheckError(f"negative count for {(a, b, c, n)}")
    return CountResult(count=count, witness=witness, symbols=sym,
                       floor_sums=(s1, s2, s3), floor_sum_steps=(k1, k2, k3))


def count3(a, b, c, n):
    """Full pipeline: gcd normalization, pairwise reduction, closed form."""
    inst = Instance3(a, b, c, n)
    norm = normalize_gcd(inst)
    if norm is None:
        return CountResult(count=0)
    g = inst.a // norm.a
    w = reduce_pairwise(norm)
    w = replace(w, g=g)
    if w.reduced is None:
        return CountResult(count=0, witness=w)
    r = w.reduced
    return count3_closed(r.a, r.b, r.c, r.n, witness=w)


def count3_oracle_enum(a, b, c, n, budget=None):
    """Brute-force count: loop over z then y, x fixed by divisibility.

    Intended for small instances; refuses to run past the iteration budget
    (DENUM_ORACLE_BUDGET, default 10^9).
    """
    if a < 1 or b < 1 or c < 1 or n < 0:
        raise InvalidInputError("requires a, b, c >= 1 and n >= 0")
    budget = _oracle_budget() if budget is None else budget
    if (n // c + 1) * (n // b + 1) > budget:
        raise ResourceLimitError("enumeration oracle budget exceeded")
    total = 0
    for z in range(n // c + 1):
        rem_z = n - c * z
        for y in range(rem_z // b + 1):
            if (rem_z - b * y) % a == 0:
                total += 1
    return total


def count3_oracle_dp(a, b, c, n):
    """Coefficient of x^n in 1/((1-x^a)(1-x^b)(1-x^c)) by prefix accumulation.

    Linear in n with exact integer accumulators; n is capped at 10^8.
    """
    if a < 1 or b < 1 or c < 1 or n < 0:
        raise InvalidInputError("requires a, b, c >= 1 and n >= 0")
    if n > DP_BUDGET:
        raise ResourceLimitError(f"dp oracle supports n <= {DP_BUDGET}")
    arr = [0] * (n + 1)
    arr[0] = 1
    for d in (a, b, c):
        for i in range(d, n + 1):
            arr[i] += arr[i - d]
    return arr[n]


def dp_counts_upto(a, b, c, n_max):
    """All counts for n = 0..n_max in one pass; same recurrence as the dp oracle."""
    if a < 1 or b < 1 or c < 1 or n_max < 0:
        raise InvalidInputError("requires a, b, c >= 1 and n_max >= 0")
    if n_max > DP_BUDGET:
        raise ResourceLimitError(f"dp oracle supports n <= {DP_BUDGET}")
    arr = [0] * (n_max + 1)
    arr[0] = 1
    for d in (a, b, c):
        for i in range(d, n_max + 1):
            arr[i] += arr[i - d]
    return arr
