"""Executable forms of the classical binomial congruence tests.

Each operation returns a verdict or witnessing residues.  Precondition
violations always raise ValueError; they are never reported as a negative
verdict, so a caller can tell misuse apart from mathematical content.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt, prod
from typing import NamedTuple, Optional

from .arith import (
    binomial_exact,
    binomial_mod,
    is_prime,
    kummer_valuation,
    least_prime_factor_trial,
    modular_inverse,
    padic_valuation,
    shifted_central_binomial_mod_prime_power,
)

__all__ = [
    "Verdict",
    "NonPrimalityVerdict",
    "CongruenceReport",
    "LpfResult",
    "EvenConverseResult",
    "PrimeFactorIncongruence",
    "WolstenholmeReport",
    "wilson_test",
    "babbage_primality_test",
    "babbage_report",
    "sharp_babbage_primality_test",
    "sharp_babbage_report",
    "lpf_via_congruence",
    "prime_factor_incongruence",
    "divisor_congruence_holds",
    "mestrovic_check",
    "mestrovic_report",
    "babbage_nonprimality_test",
    "wolstenholme_report",
    "bernoulli_bp3_mod_p",
    "johnson_congruence_check",
    "even_converse_check",
    "lemma1_valuation",
    "lemma2_parity",
    "counterexample_verify",
    "prime_square_central_residue",
]


class Verdict(enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    INCONCLUSIVE = "inconclusive"


class NonPrimalityVerdict(enum.Enum):
    COMPOSITE = "composite"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CongruenceReport:
    """Outcome of a simultaneous-congruence check.

    witness is the (n, residue) of the first failing congruence, present
    exactly when verdict is FAILS.
    """

    subject: int
    verdict: Verdict
    witness: Optional[tuple[int, int]] = None


class LpfResult(NamedTuple):
    """Least prime factor ell of m and the residue of C(m+ell, ell) mod m.

    The residue is congruent to m/ell + 1; for every n < ell the congruence
    C(m+n, n) == 1 (mod m) holds.
    """

    ell: int
    residue: int


class EvenConverseResult(NamedTuple):
    residue_mod_4: int
    holds: bool


class PrimeFactorIncongruence(NamedTuple):
    residue_mod_m: int
    residue_mod_pr: int
    r: int


@dataclass(frozen=True)
class WolstenholmeReport:
    p: int
    residue_mod_p3: int
    residue_mod_p4: int
    is_wolstenholme_prime: bool
    bernoulli_bp3_mod_p: int


def wilson_test(p: int) -> bool:
    """(p-1)! == -1 (mod p): holds exactly at primes (Wilson's theorem)."""
    if p < 2:
        raise ValueError("wilson_test requires p >= 2")
    f = 1
    for k in range(2, p):
        f = f * k % p
    return f == p - 1


def _first_incongruence(m: int, modulus: int, last_n: int) -> Optional[tuple[int, int]]:
    """First n in [0, last_n] with C(m+n, n) != 1 (mod modulus), with its residue."""
    for n in range(last_n + 1):
        r = binomial_mod(m + n, n, modulus)
        if r != 1:
            return n, r
    return None


def babbage_report(p: int) -> CongruenceReport:
    """Babbage's primality criterion: C(p+n, n) == 1 (mod p) for 0 <= n <= p-1."""
    if p < 2:
        raise ValueError("babbage test requires p >= 2")
    w = _first_incongruence(p, p, p - 1)
    return CongruenceReport(p, Verdict.HOLDS if w is None else Verdict.FAILS, w)


def babbage_primality_test(p: int) -> bool:
    """True iff every congruence C(p+n, n) == 1 (mod p), n <= p-1, holds; iff p is prime."""
    return babbage_report(p).verdict is Verdict.HOLDS


def sharp_babbage_report(p: int) -> CongruenceReport:
    """Babbage's criterion with the range shortened to 0 <= n <= sqrt(p)."""
    if p < 2:
        raise ValueError("babbage test requires p >= 2")
    w = _first_incongruence(p, p, isqrt(p))
    return CongruenceReport(p, Verdict.HOLDS if w is None else Verdict.FAILS, w)


def sharp_babbage_primality_test(p: int) -> bool:
    """Same verdict as babbage_primality_test, checking only n <= floor(sqrt(p)).

    The shortened range cannot be trimmed further: for p = q**2 (q prime)
    the congruences hold up to n = q - 1 and first fail at n = q.
    """
    return sharp_babbage_report(p).verdict is Verdict.HOLDS


def _next_sharing_factor(start: int, m: int) -> int:
    ell = start
    while gcd(ell, m) == 1:
        ell += 1
    return ell


def lpf_via_congruence(m: int) -> LpfResult:
    """Scan ell = 1, 2, 3, ... for the first C(m+ell, ell) != 1 (mod m).

    The integer identity ell * C(m+ell, ell) = (m+ell) * C(m+ell-1, ell-1)
    reduces, whenever ell is a unit mod m, to r_ell = r_{ell-1} * ell *
    ell**-1 = r_{ell-1}: the residue can only change at steps sharing a
    factor with m.  The scan therefore jumps between those steps and
    evaluates the binomial residue there.  The first such step is the
    least prime factor of m (any smaller candidate would contain a smaller
    prime factor of m).
    """
    if m < 2:
        raise ValueError("lpf_via_congruence requires m >= 2")
    ell = least_prime_factor_trial(m)
    while True:
        residue = binomial_mod(m + ell, ell, m)
        if residue != 1:
            return LpfResult(ell, residue)
        # Unreachable for any m >= 2: the residue at the least prime factor
        # is m/ell + 1 != 1.  Kept so the scan semantics stay honest.
        ell = _next_sharing_factor(ell + 1, m)


def prime_factor_incongruence(m: int, p: int) -> PrimeFactorIncongruence:
    """Witness residues for a prime factor p of m.

    C(m+p, p) != 1 (mod m), and with r the exact exponent of p in m,
    C(m+p, p) == m/p + 1 != 1 (mod p**r).
    """
    if m < 2:
        raise ValueError("prime_factor_incongruence requires m >= 2")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if m % p != 0:
        raise ValueError(f"{p} does not divide {m}")
    r = padic_valuation(m, p).exponent
    residue_mod_m = binomial_mod(m + p, p, m)
    residue_mod_pr = binomial_mod(m + p, p, p**r)
    return PrimeFactorIncongruence(residue_mod_m, residue_mod_pr, r)


def divisor_congruence_holds(m: int, d: int) -> bool:
    """True iff C(m+d, d) == 1 (mod m) for the divisor d > 1 of m.

    Whenever this holds, d is composite: prime divisors always break the
    congruence.
    """
    if m < 2 or d < 2:
        raise ValueError("divisor_congruence_holds requires m >= 2 and d >= 2")
    if m % d != 0:
        raise ValueError(f"{d} does not divide {m}")
    return binomial_mod(m + d, d, m) == 1


def mestrovic_report(m: int, p: int) -> CongruenceReport:
    """Mestrovic's criterion: C(m+n, n) == 1 (mod p) for all 0 <= n <= m-1.

    Holds exactly when p is prime and m is a power of p.
    """
    if m < 2 or p < 2:
        raise ValueError("mestrovic check requires m >= 2 and p >= 2")
    w = _first_incongruence(m, p, m - 1)
    return CongruenceReport(m, Verdict.HOLDS if w is None else Verdict.FAILS, w)


def mestrovic_check(m: int, p: int) -> bool:
    return mestrovic_report(m, p).verdict is Verdict.HOLDS


_EXACT_CENTRAL_LIMIT = 1_000_000


def _central_binomial_exact_mod(m: int, modulus: int) -> int:
    """C(2m-1, m-1) mod modulus, with a prime-square escape hatch for huge m."""
    if m <= _EXACT_CENTRAL_LIMIT:
        return binomial_exact(2 * m - 1, m - 1) % modulus
    root = isqrt(m)
    if root * root == m and modulus == m * m and is_prime(root):
        return prime_square_central_residue(root)
    raise ValueError(
        f"m={m} is beyond the exact central-binomial route "
        "(supported above the limit only for m a prime square, mod m**2)"
    )


def babbage_nonprimality_test(m: int) -> NonPrimalityVerdict:
    """Single-congruence composite test: C(2m-1, m-1) != 1 (mod m**2) forces m composite.

    The converse fails (squares of Wolstenholme primes), so the other branch
    is INCONCLUSIVE, never "prime".
    """
    if m < 3:
        raise ValueError("babbage_nonprimality_test requires m >= 3")
    residue = _central_binomial_exact_mod(m, m * m)
    if residue != 1:
        return NonPrimalityVerdict.COMPOSITE
    return NonPrimalityVerdict.INCONCLUSIVE


def wolstenholme_report(p: int) -> WolstenholmeReport:
    """Residues of C(2p-1, p-1) mod p**3 and p**4 for a prime p >= 5.

    Wolstenholme's theorem forces the mod-p**3 residue to 1.  The prime is
    a Wolstenholme prime when the congruence survives mod p**4, equivalently
    when p divides the numerator of the Bernoulli number B_{p-3}; the
    residue of B_{p-3} mod p is extracted from the lifted binomial residue
    via C(2p-1, p-1) == 1 - (2/3) p**3 B_{p-3} (mod p**4).
    """
    if p < 5 or not is_prime(p):
        raise ValueError("wolstenholme_report requires a prime p >= 5")
    p3 = p**3
    r4 = shifted_central_binomial_mod_prime_power(p, 4)
    r3 = r4 % p3
    diff = 1 - r4
    if diff % p3 != 0:
        # would contradict Wolstenholme's theorem for a certified prime
        raise ArithmeticError(f"mod-p**3 congruence failed for prime {p}")
    b = (diff // p3) * 3 * modular_inverse(2, p) % p
    return WolstenholmeReport(
        p=p,
        residue_mod_p3=r3,
        residue_mod_p4=r4,
        is_wolstenholme_prime=(r4 == 1),
        bernoulli_bp3_mod_p=b,
    )


def bernoulli_bp3_mod_p(p: int) -> int:
    """Residue of the Bernoulli number B_{p-3} mod p, for a prime p >= 5."""
    return wolstenholme_report(p).bernoulli_bp3_mod_p


_JOHNSON_EXACT_LIMIT = 1000


def johnson_congruence_check(p: int) -> bool:
    """C(2p-1, p-1) == C(2p**2-1, p**2-1) (mod p**4): true for every prime p >= 5.

    The left side runs through the modular product, the right side through
    the exact binomial, so this doubles as a cross-check of both routes.
    """
    if p < 5 or not is_prime(p):
        raise ValueError("johnson_congruence_check requires a prime p >= 5")
    if p > _JOHNSON_EXACT_LIMIT:
        raise ValueError(
            f"johnson_congruence_check needs the exact C(2p**2-1, p**2-1); p <= {_JOHNSON_EXACT_LIMIT}"
        )
    q = p**4
    lhs = shifted_central_binomial_mod_prime_power(p, 4)
    rhs = binomial_exact(2 * p * p - 1, p * p - 1) % q
    return lhs == rhs


_EVEN_CONVERSE_LIMIT = 4_000_000


def even_converse_check(m: int) -> EvenConverseResult:
    """Residue of C(2m-1, m-1) mod 4 and whether C(2m-1, m-1) != 1 (mod m**2).

    The mod-4 residue is never 1, and is 3 exactly when m is a power of 2.
    For even m the incongruence mod m**2 always holds (4 divides m**2).
    """
    if m < 2:
        raise ValueError("even_converse_check requires m >= 2")
    if m > _EVEN_CONVERSE_LIMIT:
        raise ValueError(f"even_converse_check computes the exact binomial; m <= {_EVEN_CONVERSE_LIMIT}")
    c = binomial_exact(2 * m - 1, m - 1)
    return EvenConverseResult(c % 4, c % (m * m) != 1)


def lemma1_valuation(m: int, n: int) -> int:
    """v2(C(m, n)) = v2(m) - v2(n), valid for 1 <= n <= m with n <= 2**v2(m).

    Outside that range the formula can be wrong (e.g. C(10, 6)), so the
    precondition is enforced rather than silently returning a bad value.
    """
    if n < 1 or m < n:
        raise ValueError("lemma1_valuation requires m >= n >= 1")
    vm = padic_valuation(m, 2).exponent
    if n > 2**vm:
        raise ValueError(f"lemma1_valuation requires n <= 2**v2(m) = {2**vm}, got n={n}")
    return vm - padic_valuation(n, 2).exponent


def lemma2_parity(m: int) -> bool:
    """True iff C(2m-1, m-1) is odd, iff m is a power of 2.

    2 * C(2m-1, m-1) = C(2m, m), and the carries adding m + m in base 2 are
    the ones in the binary expansion of m, so oddness means exactly one set
    bit.
    """
    if m < 1:
        raise ValueError("lemma2_parity requires m >= 1")
    return kummer_valuation(m, m, 2) == 1


_PRODUCT_CHUNK = 32  # sweet spot: chunk products stay small while mod ops amortize


@lru_cache(maxsize=8)
def prime_square_central_residue(p: int) -> int:
    """C(2p**2-1, p**2-1) mod p**4 without forming the exact binomial.

    Factor C(2m-1, m-1) = prod_{k=1}^{m-1} (m+k)/k at m = p**2.  The terms
    with p | k collapse to C(2p-1, p-1); the remaining k are units mod p**4,
    so their contribution is two chunked running products and one inversion.
    For p = 16843 this is ~2.8e8 modular multiplications.
    """
    if p < 5 or not is_prime(p):
        raise ValueError("prime_square_central_residue requires a prime p >= 5")
    q = p**4
    m = p * p
    num = den = 1
    for j in range(p):
        lo = j * p + 1
        hi = lo + p - 1  # excludes the next multiple of p
        for c0 in range(lo, hi, _PRODUCT_CHUNK):
            c1 = min(c0 + _PRODUCT_CHUNK, hi)
            num = num * prod(range(m + c0, m + c1)) % q
            den = den * prod(range(c0, c1)) % q
    unit_part = num * modular_inverse(den, q) % q
    return shifted_central_binomial_mod_prime_power(p, 4) * unit_part % q


def counterexample_verify(p: int) -> bool:
    """True iff m = p**2 defeats the single-congruence composite test.

    That is, m is composite yet C(2m-1, m-1) == 1 (mod m**2); happens
    exactly when p is a Wolstenholme prime.
    """
    if p < 5 or not is_prime(p):
        raise ValueError("counterexample_verify requires a prime p >= 5")
    return prime_square_central_residue(p) == 1
