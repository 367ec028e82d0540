"""Quadratic-residue layer: Eisenstein exponents, Legendre symbols, the
three-variable counts that encode them, and the identities tying them to
the non-representability census.

All operations take a pair of distinct odd primes and most return an
IdentityReport carrying both sides of the checked equality.  Primality is
established by a deterministic Miller-Rabin test valid for 64-bit inputs,
so a sweep can never silently accept a composite.
"""

from math import gcd

from denumerant.counting import count3_closed
from denumerant.errors import CrossCheckError, InvalidInputError
from denumerant.exact import mod_inverse
from denumerant.floorsum import floor_sum_fast
from denumerant.linear2 import nonrepresentable_set
from denumerant.report import make_report

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n):
    """Deterministic Miller-Rabin, exact for all n < 3.3 * 10^24."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _require_pair(p, q):
    if p == q:
        raise InvalidInputError("primes must be distinct")
    for v in (p, q):
        if v < 3 or v % 2 == 0 or not is_prime(v):
            raise InvalidInputError(f"{v} is not an odd prime")


def eisenstein_t(p, q):
    """t = sum_{i=1}^{(p-1)/2} floor(i*q/p); its parity gives (q/p)."""
    _require_pair(p, q)
    return floor_sum_fast((p - 1) // 2, q, p)


def legendre(q, p):
    """Legendre symbol (q/p) from the Eisenstein exponent: (-1)^t."""
    return -1 if eisenstein_t(p, q) % 2 else 1


def legendre_euler(q, p):
    """Independent oracle for (q/p) by Euler's criterion q^((p-1)/2) mod p."""
    _require_pair(p, q)
    r = pow(q, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def npq_count(p, q):
    """Count of p*x + q*y + z = q(p-1)/2, via the closed form.

    Cross-checked on every call against a direct sum over y.  Satisfies
    N_{p,q} = (p+1)/2 + t(p, q); the symbol is (-1)^(N_{p,q} - (p+1)/2).
    """
    _require_pair(p, q)
    m = q * (p - 1) // 2
    count = count3_closed(p, q, 1, m).count
    direct = sum((m - q * y) // p + 1 for y in range(m // q + 1))
    if count != direct:
        raise CrossCheckError(f"npq_count mismatch for {(p, q)}")
    return count


def lemma8_count(p, q):
    """Alternate count of p*x + q*y + z = q(p-1)/2, valid for q < p:
    (p+1)/2 + (p-1)(q-1)/4 - sum_{i<=(q-1)/2} floor(i*p/q)."""
    _require_pair(p, q)
    if q >= p:
        raise InvalidInputError("requires q < p")
    return ((p + 1) // 2 + (p - 1) * (q - 1) // 4
            - floor_sum_fast((q - 1) // 2, p, q))


def gauss_identity(p, q):
    """t(p,q) + t(q,p) = (p-1)(q-1)/4."""
    t1, t2 = eisenstein_t(p, q), eisenstein_t(q, p)
    return make_report("gauss", t1 + t2, (p - 1) * (q - 1) // 4,
                       p=p, q=q, t1=t1, t2=t2)


def sylvester_gauss_equivalence(p, q):
    """N0 + 2*(t1 + t2) = (p-1)(q-1), N0 counted by the reachability sieve."""
    _require_pair(p, q)
    t1, t2 = eisenstein_t(p, q), eisenstein_t(q, p)
    n0 = len(nonrepresentable_set(p, q))
    return make_report("equivalence", n0 + 2 * (t1 + t2), (p - 1) * (q - 1),
                       p=p, q=q, N0=n0, t1=t1, t2=t2)


def lemma6_count(p, q):
    """Count of p*x + q*y + z = p(q-1)/2 + q(p-1)/2, checked two ways:
    directly by the closed form, and as target + 1 - N0."""
    _require_pair(p, q)
    m = p * (q - 1) // 2 + q * (p - 1) // 2
    direct = count3_closed(p, q, 1, m).count
    n0 = len(nonrepresentable_set(p, q))
    via_n0 = m + 1 - n0
    if direct != via_n0:
        raise CrossCheckError(f"lemma6 count mismatch for {(p, q)}")
    return direct


def lemma7_count(p, q):
    """Same count as lemma6_count via the four-case folding:
    2*(N_{p,q} + N_{q,p}) - ((p+1)/2 + (q+1)/2 + 1)."""
    return (2 * (npq_count(p, q) + npq_count(q, p))
            - ((p + 1) // 2 + (q + 1) // 2 + 1))


def byproduct_sum(p, q):
    """Tail-sum identity for p < q:
    sum over the last floor((q-p)/2p)+1 terms of floor(i*p/q), i up to
    (q-1)/2, equals ((p-1)/2) * (floor((q-p)/2p) + 1)."""
    _require_pair(p, q)
    if p >= q:
        raise InvalidInputError("requires p < q")
    d = (q - p) // (2 * p)
    hi = (q - 1) // 2
    lo = hi - d
    lhs = floor_sum_fast(hi, p, q) - floor_sum_fast(lo - 1, p, q)
    rhs = (p - 1) // 2 * (d + 1)
    return make_report("byproduct", lhs, rhs, p=p, q=q, lo=lo, hi=hi, d=d)


def _half_product(k, p, q):
    """Exact value of (k+1)(k+p+q)/2; the factors cannot both be odd."""
    prod = (k + 1) * (k + p + q)
    if prod % 2 != 0:
        raise CrossCheckError("(k+1)(k+p+q) is odd")
    return prod // 2


def parity_theorem(p, q):
    """Parity of the count of p*x + q*y + z = k at an aligned target k.

    With k chosen so that k = q(p-1)/2 (mod p) and k = (q-1)/2 (mod q)
    (the smallest such k is used), the closed-form count collapses to two
    half-length floor sums, and Gauss's half-sum identity plus
    Eisenstein's lemma give: the count has the same parity as

        (k+1)(k+p+q)/2 + (p-1)(q-1)/4 + (p^2-1)/8 + (q^2-1)/8.

    A widely quoted variant instead takes k = (p-1)/2 + p*((q-1)/2)*pinv
    with pinv = p^-1 mod q, comparing against (k+1)(k+p+q)/2
    + ((q^2-1)/8)(1+pinv) + (p-1)(q-1)/4.  That variant silently applies
    Eisenstein's lemma to the numerator pinv, which may be even (the
    lemma needs an odd numerator); it agrees at small desk-check pairs
    like (3,5) and (5,3) but fails for roughly half of all pairs, first
    at (3,13) where the count 377 is odd and the formula 14894 is even.
    Its values are reported in the variant_* context fields and are not
    part of the verdict.
    """
    _require_pair(p, q)
    pinv = mod_inverse(p, q)
    r1 = q * (p - 1) // 2 % p
    r2 = (q - 1) // 2
    k = (r1 + p * ((r2 - r1) * mod_inverse(p % q, q) % q)) % (p * q)
    count = count3_closed(p, q, 1, k).count
    rhs = (_half_product(k, p, q) + (p - 1) * (q - 1) // 4
           + (p * p - 1) // 8 + (q * q - 1) // 8)
    vk = (p - 1) // 2 + p * ((q - 1) // 2) * pinv
    vcount = count3_closed(p, q, 1, vk).count
    vrhs = (_half_product(vk, p, q) + (q * q - 1) // 8 * (1 + pinv)
            + (p - 1) * (q - 1) // 4)
    return make_report("parity", count % 2, rhs % 2,
                       p=p, q=q, k=k, count=count, formula=rhs,
                       variant_k=vk, variant_count=vcount,
                       variant_formula=vrhs,
                       variant_holds=vcount % 2 == vrhs % 2)
