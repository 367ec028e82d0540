"""Exact integer primitives: extended gcd, modular inverse, one-based residues.

Everything here works on Python's arbitrary-precision ints, so intermediates
like n*(n+a+b+c) never wrap no matter how large the inputs are.
"""

from denumerant.errors import InvalidInputError, NotInvertibleError


def egcd(a, b):
    """Extended Euclid: return (g, x, y) with g = gcd(a, b) > 0 and a*x + b*y = g.

    Both arguments must be >= 0 and not both zero.
    """
    if a < 0 or b < 0:
        raise InvalidInputError("egcd requires non-negative arguments")
    if a == 0 and b == 0:
        raise InvalidInputError("gcd(0, 0) is undefined")
    # iterative to keep recursion depth flat for huge inputs
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inverse(x, m):
    """Inverse of x modulo m, in [0, m).

    Requires gcd(x, m) = 1.  By convention mod_inverse(x, 1) = 0, which keeps
    downstream residue computations well-defined when a modulus degenerates
    to 1.
    """
    if m < 1:
        raise InvalidInputError("modulus must be >= 1")
    if m == 1:
        return 0
    g, u, _ = egcd(x % m, m)
    if g != 1:
        raise NotInvertibleError(f"{x} is not invertible modulo {m}")
    return u % m


def residue_one_based(v, m):
    """Residue of v modulo m normalized into [1, m] (residue 0 maps to m).

    v may be negative; m must be >= 1.
    """
    if m < 1:
        raise InvalidInputError("modulus must be >= 1")
    r = v % m
    return m if r == 0 else r
