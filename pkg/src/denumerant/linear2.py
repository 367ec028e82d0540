"""The two-variable equation a*x + b*y = n: exact count, unique-solution
window, Frobenius number, and the census of non-representable integers.

For coprime a, b the count is 1 + (n - a*a1 - b*b1)/(ab) where a1 and b1
are the residues n*a^-1 mod b and n*b^-1 mod a; the division is always
exact and the result is always 0 or more.
"""

from math import gcd

from denumerant.errors import CrossCheckError, InvalidInputError
from denumerant.exact import mod_inverse


def count2(a, b, n):
    """Number of non-negative solutions of a*x + b*y = n (any a, b >= 1)."""
    if a < 1 or b < 1 or n < 0:
        raise InvalidInputError("requires a, b >= 1 and n >= 0")
    g = gcd(a, b)
    if n % g != 0:
        return 0
    a, b, n = a // g, b // g, n // g
    a1 = n * mod_inverse(a, b) % b
    b1 = n * mod_inverse(b, a) % a
    num = n - a * a1 - b * b1
    if num % (a * b) != 0:
        raise CrossCheckError("count2 division not exact")
    count = 1 + num // (a * b)
    if count < 0:
        raise CrossCheckError("count2 produced a negative count")
    return count


def unique_window(a, b):
    """The half-open interval [(a-1)(b-1), ab) on which the count is exactly 1."""
    _require_coprime_pair(a, b)
    return (a - 1) * (b - 1), a * b


def frobenius2(a, b):
    """Largest n not representable as a*x + b*y, namely ab - a - b.

    (Some sources quote (a-1)(b-1), which is one more than the largest
    non-representable integer; the enumeration oracle settles the constant.)
    """
    _require_coprime_pair(a, b)
    return a * b - a - b


def nonrepresentable_count(p, q):
    """Number of positive integers not of the form p*x + q*y: (p-1)(q-1)/2."""
    _require_coprime_pair(p, q)
    return (p - 1) * (q - 1) // 2


def nonrepresentable_set(p, q):
    """Sorted list of all non-representable positive integers.

    Built by a pure reachability sieve over [0, pq], independent of the
    count2 formula, so it can serve as its oracle.  All non-representable
    integers lie below pq.
    """
    if p < 1 or q < 1:
        raise InvalidInputError("requires p, q >= 1")
    if gcd(p, q) != 1:
        raise InvalidInputError("requires gcd(p, q) = 1")
    top = p * q
    reachable = bytearray(top + 1)
    for x in range(0, top // p + 1):
        start = p * x
        for m in range(start, top + 1, q):
            reachable[m] = 1
    return [n for n in range(1, top + 1) if not reachable[n]]


def _require_coprime_pair(a, b):
    if a < 2 or b < 2:
        raise InvalidInputError("requires a, b >= 2")
    if gcd(a, b) != 1:
        raise InvalidInputError("requires gcd(a, b) = 1")
