"""Binomial-coefficient congruence tests.

Primality and non-primality tests built on simultaneous binomial
congruences, the least-prime-factor congruence scan, Wolstenholme prime
checks, and the supporting exact/modular arithmetic.
"""

from .arith import (
    BezoutCertificate,
    Valuation,
    batch_inverse,
    binomial_exact,
    binomial_mod,
    divisors,
    factorize,
    gcd_extended,
    is_prime,
    is_prime_power,
    kummer_valuation,
    least_prime_factor_trial,
    lucas_binomial_mod_p,
    modular_inverse,
    padic_valuation,
    primes_below,
    shifted_central_binomial_mod_prime_power,
)
from .sequences import (
    ScanCheckpoint,
    SequenceRecord,
    a290040_scan,
    prime_power_scan,
    qualifying_divisors,
)
from .theorems import (
    CongruenceReport,
    EvenConverseResult,
    LpfResult,
    NonPrimalityVerdict,
    PrimeFactorIncongruence,
    Verdict,
    WolstenholmeReport,
    babbage_nonprimality_test,
    babbage_primality_test,
    babbage_report,
    bernoulli_bp3_mod_p,
    counterexample_verify,
    divisor_congruence_holds,
    even_converse_check,
    johnson_congruence_check,
    lemma1_valuation,
    lemma2_parity,
    lpf_via_congruence,
    mestrovic_check,
    mestrovic_report,
    prime_factor_incongruence,
    prime_square_central_residue,
    sharp_babbage_primality_test,
    sharp_babbage_report,
    wilson_test,
    wolstenholme_report,
)

__version__ = "0.1.0"
