"""Reduction of a*x + b*y + c*z = n to an equivalent pairwise-coprime equation.

normalize_gcd divides out g = gcd(a, b, c) (returning None when g does not
divide n, in which case there are no solutions).  reduce_pairwise then
applies the congruence bijection: with g1 = gcd(b, c), g2 = gcd(c, a),
g3 = gcd(a, b), every solution has x = n1 (mod g1), y = n2 (mod g2),
z = n3 (mod g3) for fixed offsets, and substituting x = n1 + g1*X etc.
yields A*X + B*Y + C*Z = N with A, B, C pairwise coprime.  The witness
records everything needed to replay the map and lift solutions back.
"""

from dataclasses import dataclass
from math import gcd

from denumerant.errors import CrossCheckError, InvalidInputError
from denumerant.exact import mod_inverse


@dataclass(frozen=True)
class Instance3:
    """One equation a*x + b*y + c*z = n over non-negative integers."""

    a: int
    b: int
    c: int
    n: int

    def __post_init__(self):
        if self.a < 1 or self.b < 1 or self.c < 1:
            raise InvalidInputError("coefficients must be >= 1")
        if self.n < 0:
            raise InvalidInputError("right-hand side must be >= 0")


@dataclass(frozen=True)
class ReductionWitness:
    """Replayable record of the pairwise-coprime reduction.

    original is the gcd-normalized input instance; reduced the equivalent
    pairwise-coprime one.  N may be negative (then N_nonneg is False and the
    solution count is 0); the offsets live in [0, g_i).
    """

    g: int
    g1: int
    g2: int
    g3: int
    n1: int
    n2: int
    n3: int
    original: Instance3
    reduced: Instance3 | None

    @property
    def N_nonneg(self):
        return self.reduced is not None


def normalize_gcd(inst):
    """Divide out gcd(a, b, c); return None when it does not divide n."""
    g = gcd(inst.a, inst.b, inst.c)
    if inst.n % g != 0:
        return None
    return Instance3(inst.a // g, inst.b // g, inst.c // g, inst.n // g)


def reduce_pairwise(inst):
    """Reduce an instance with gcd(a, b, c) = 1 to pairwise-coprime form."""
    a, b, c, n = inst.a, inst.b, inst.c, inst.n
    if gcd(a, b, c) != 1:
        raise InvalidInputError("requires gcd(a, b, c) = 1")
    g1, g2, g3 = gcd(b, c), gcd(c, a), gcd(a, b)
    n1 = n * mod_inverse(a, g1) % g1
    n2 = n * mod_inverse(b, g2) % g2
    n3 = n * mod_inverse(c, g3) % g3
    num = n - a * n1 - b * n2 - c * n3
    if num % (g1 * g2 * g3) != 0:
        raise CrossCheckError("reduced right-hand side is not an integer")
    N = num // (g1 * g2 * g3)
    A, B, C = a // (g2 * g3), b // (g3 * g1), c // (g1 * g2)
    if gcd(A, B) != 1 or gcd(B, C) != 1 or gcd(C, A) != 1:
        raise CrossCheckError("reduced coefficients are not pairwise coprime")
    reduced = Instance3(A, B, C, N) if N >= 0 else None
    return ReductionWitness(g=1, g1=g1, g2=g2, g3=g3, n1=n1, n2=n2, n3=n3,
                            original=inst, reduced=reduced)


def lift_solution(w, X, Y, Z):
    """Map a solution of the reduced instance back to the original equation."""
    if w.reduced is None:
        raise InvalidInputError("reduced instance has no solutions (N < 0)")
    if X < 0 or Y < 0 or Z < 0:
        raise InvalidInputError("solution components must be non-negative")
    r = w.reduced
    if r.a * X + r.b * Y + r.c * Z != r.n:
        raise InvalidInputError("not a solution of the reduced instance")
    x = w.n1 + w.g1 * X
    y = w.n2 + w.g2 * Y
    z = w.n3 + w.g3 * Z
    o = w.original
    if o.a * x + o.b * y + o.c * z != o.n:
        raise CrossCheckError("lifted point does not solve the original")
    return x, y, z


def project_solution(w, x, y, z):
    """Forward direction of the bijection: original solution -> reduced one."""
    o = w.original
    if o.a * x + o.b * y + o.c * z != o.n:
        raise InvalidInputError("not a solution of the original instance")
    qx, rx = divmod(x - w.n1, w.g1)
    qy, ry = divmod(y - w.n2, w.g2)
    qz, rz = divmod(z - w.n3, w.g3)
    if rx or ry or rz:
        raise CrossCheckError("solution does not respect the residue offsets")
    return qx, qy, qz
