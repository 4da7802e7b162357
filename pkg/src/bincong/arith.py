"""Exact and modular big-integer primitives.

All values are plain Python ints (arbitrary precision throughout; residues
mod fourth powers of seven-digit primes overflow fixed-width arithmetic).
The exact binomial is delegated to GMP via gmpy2; every modular route is
implemented here so the two sides stay independent and can be checked
against each other.
"""

from __future__ import annotations

import math
from math import isqrt
from typing import Iterable, NamedTuple

import gmpy2

__all__ = [
    "BezoutCertificate",
    "Valuation",
    "gcd_extended",
    "modular_inverse",
    "batch_inverse",
    "binomial_exact",
    "binomial_mod",
    "lucas_binomial_mod_p",
    "shifted_central_binomial_mod_prime_power",
    "kummer_valuation",
    "padic_valuation",
    "factorize",
    "least_prime_factor_trial",
    "is_prime",
    "is_prime_power",
    "primes_below",
    "divisors",
]


class BezoutCertificate(NamedTuple):
    """(g, a, b) with a*x + b*y = g = gcd(x, y)."""

    g: int
    a: int
    b: int


class Valuation(NamedTuple):
    """base**exponent is the highest power of base dividing the valued integer."""

    base: int
    exponent: int


def gcd_extended(x: int, y: int) -> BezoutCertificate:
    """Extended Euclidean algorithm for non-negative x, y, not both zero."""
    if x < 0 or y < 0:
        raise ValueError("gcd_extended expects non-negative integers")
    if x == 0 and y == 0:
        raise ValueError("gcd_extended(0, 0) is undefined")
    a0, b0, r0 = 1, 0, x
    a1, b1, r1 = 0, 1, y
    while r1:
        q = r0 // r1
        a0, a1 = a1, a0 - q * a1
        b0, b1 = b1, b0 - q * b1
        r0, r1 = r1, r0 - q * r1
    return BezoutCertificate(r0, a0, b0)


def modular_inverse(a: int, m: int) -> int:
    """Inverse of a mod m; ValueError when gcd(a, m) != 1."""
    try:
        return pow(a, -1, m)
    except ValueError:
        raise ValueError(f"{a} is not invertible mod {m}") from None


def batch_inverse(values: Iterable[int], m: int) -> list[int]:
    """Invert every element mod m with a single extended-gcd inversion.

    Montgomery's trick: forward prefix products, one inversion of the full
    product, then a backward pass recovering each individual inverse.
    Raises ValueError if any element is a non-unit.
    """
    vals = [v % m for v in values]
    if not vals:
        return []
    prefix = [1] * (len(vals) + 1)
    for i, v in enumerate(vals):
        prefix[i + 1] = prefix[i] * v % m
    inv = modular_inverse(prefix[-1], m)
    out = [0] * len(vals)
    for i in range(len(vals) - 1, -1, -1):
        out[i] = prefix[i] * inv % m
        inv = inv * vals[i] % m
    return out


def binomial_exact(a: int, b: int) -> int:
    """C(a, b), exactly.  C(a, b) = 0 when b > a."""
    if a < 0 or b < 0:
        raise ValueError("binomial_exact expects non-negative integers")
    return int(gmpy2.comb(a, b))


def least_prime_factor_trial(m: int) -> int:
    """Smallest prime dividing m, by trial division up to sqrt(m)."""
    if m < 2:
        raise ValueError("least_prime_factor_trial requires m >= 2")
    if m % 2 == 0:
        return 2
    if m % 3 == 0:
        return 3
    i = 5
    while i * i <= m:
        if m % i == 0:
            return i
        if m % (i + 2) == 0:
            return i + 2
        i += 6
    return m


def is_prime(n: int) -> bool:
    """Deterministic trial-division primality check."""
    return n >= 2 and least_prime_factor_trial(n) == n


def factorize(m: int) -> list[tuple[int, int]]:
    """Complete prime factorization of m >= 2 as (prime, exponent) pairs, ascending."""
    if m < 2:
        raise ValueError("factorize requires m >= 2")
    factors = []
    while m > 1:
        p = least_prime_factor_trial(m)
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    return factors


def is_prime_power(n: int) -> bool:
    """True when n = p**k for a single prime p and k >= 1."""
    if n < 2:
        return False
    p = least_prime_factor_trial(n)
    while n % p == 0:
        n //= p
    return n == 1


def primes_below(n: int) -> list[int]:
    """Primes < n by a byte sieve."""
    if n <= 2:
        return []
    sieve = bytearray([1]) * n
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(n - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n, p)))
    return [i for i in range(2, n) if sieve[i]]


def divisors(m: int) -> list[int]:
    """All positive divisors of m >= 1, ascending."""
    if m < 1:
        raise ValueError("divisors requires m >= 1")
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i != m // i:
                large.append(m // i)
        i += 1
    return small + large[::-1]


def padic_valuation(k: int, p: int) -> Valuation:
    """Largest e with p**e dividing k, for k >= 1 and prime p."""
    if k < 1:
        raise ValueError("padic_valuation requires k >= 1 (valuation of 0 is infinite)")
    if not is_prime(p):
        raise ValueError(f"padic_valuation requires a prime base, got {p}")
    if p == 2:
        return Valuation(2, (k & -k).bit_length() - 1)
    e = 0
    while k % p == 0:
        k //= p
        e += 1
    return Valuation(p, e)


def kummer_valuation(a: int, b: int, p: int) -> int:
    """Number of carries when adding a and b in base p.

    Equals the exponent of p in C(a+b, a) (Kummer's theorem).
    """
    if a < 0 or b < 0:
        raise ValueError("kummer_valuation expects non-negative integers")
    if not is_prime(p):
        raise ValueError(f"kummer_valuation requires a prime base, got {p}")
    carries = 0
    carry = 0
    while a or b or carry:
        s = a % p + b % p + carry
        carry = 1 if s >= p else 0
        carries += carry
        a //= p
        b //= p
    return carries


def _digit_binomial_mod_p(da: int, db: int, p: int) -> int:
    """C(da, db) mod p for base-p digits 0 <= db <= da < p.

    Every denominator k <= db < p is a unit mod p, so the row product needs
    one inversion.
    """
    db = min(db, da - db)
    if db == 0:
        return 1 % p
    num = den = 1
    for k in range(1, db + 1):
        num = num * (da - db + k) % p
        den = den * k % p
    return num * modular_inverse(den, p) % p


def _lucas_unchecked(a: int, b: int, p: int) -> int:
    result = 1
    while a or b:
        da, a = a % p, a // p
        db, b = b % p, b // p
        if db > da:
            return 0
        result = result * _digit_binomial_mod_p(da, db, p) % p
    return result


def lucas_binomial_mod_p(a: int, b: int, p: int) -> int:
    """C(a, b) mod prime p as the product of base-p digit binomials."""
    if a < 0 or b < 0:
        raise ValueError("lucas_binomial_mod_p expects non-negative integers")
    if not is_prime(p):
        raise ValueError(f"lucas_binomial_mod_p requires a prime modulus, got {p}")
    return _lucas_unchecked(a, b, p)


def shifted_central_binomial_mod_prime_power(p: int, e: int) -> int:
    """C(2p-1, p-1) mod p**e via the product of (p+k)/k over k in [1, p-1].

    Every k < p is a unit mod p**e, so the denominator product is inverted
    once as a whole: one extended-gcd inversion plus ~2p multiplications.
    """
    if e < 1:
        raise ValueError("exponent must be >= 1")
    if not is_prime(p):
        raise ValueError(f"shifted_central_binomial_mod_prime_power requires prime p, got {p}")
    q = p**e
    num = den = 1
    for k in range(1, p):
        num = num * (p + k) % q
        den = den * k % q
    return num * modular_inverse(den, q) % q


# binomial_mod dispatch thresholds
_SHORT_ROW = 64  # rows this short: exact compute and reduce is cheapest
_PRODUCT_ROW_LIMIT = 1 << 20  # cap on the invertible-product attempt
_PRIMALITY_CERT_BUDGET = 10**12  # trial division up to 10**6 for the Lucas route
_EXACT_RESULT_BIT_LIMIT = 1 << 28  # refuse exact fallbacks beyond ~32 MB results


def _binomial_bits(a: int, k: int) -> float:
    if k == 0:
        return 1.0
    lg = math.lgamma(a + 1) - math.lgamma(k + 1) - math.lgamma(a - k + 1)
    return lg / math.log(2)


def _invertible_row_product(a: int, k: int, m: int) -> int | None:
    """C(a, k) mod m as num * den**-1, or None when a denominator is a non-unit."""
    num = den = 1
    for i in range(1, k + 1):
        if math.gcd(i, m) != 1:
            return None
        num = num * ((a - k + i) % m) % m
        den = den * i % m
    return num * modular_inverse(den, m) % m


def binomial_mod(a: int, b: int, m: int) -> int:
    """Least non-negative residue of C(a, b) mod m >= 1.

    Strategy dispatch: short rows are computed exactly and reduced; prime
    moduli go through Lucas digits; composite moduli whose row denominators
    are all units use the product form with a single inversion; everything
    else falls back to the exact binomial.
    """
    if a < 0 or b < 0:
        raise ValueError("binomial_mod expects non-negative integers")
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m == 1:
        return 0
    if b > a:
        return 0
    k = min(b, a - b)
    if k <= _SHORT_ROW:
        return binomial_exact(a, b) % m
    if m <= _PRIMALITY_CERT_BUDGET and is_prime(m):
        return _lucas_unchecked(a, b, m)
    if k <= _PRODUCT_ROW_LIMIT:
        r = _invertible_row_product(a, k, m)
        if r is not None:
            return r
    if _binomial_bits(a, k) > _EXACT_RESULT_BIT_LIMIT:
        raise ValueError(
            f"C({a}, {b}) mod {m} exceeds the exact-fallback size and no "
            "modular route applies"
        )
    return binomial_exact(a, b) % m
